#ifndef TCONC_MC_ORACLE_HPP
#define TCONC_MC_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "tconc/laplace.hpp"
#include "tconc/special_functions.hpp"

namespace tconc {

// Counter-based generator: draw i depends only on (seed, i), so streams
// are reproducible bit-for-bit and partitionable at any split point.
namespace rng {

inline constexpr const char* kAlgorithm = "splitmix64-counter";

std::uint64_t word(std::uint64_t seed, std::uint64_t index);

// Uniform draw in the open interval (0, 1).
double uniform01(std::uint64_t seed, std::uint64_t index);

}  // namespace rng

struct McEstimate {
    double p_hat;
    std::int64_t n;
    double std_err;
    std::uint64_t seed;
};

// n i.i.d. Laplace draws via the inverse-CDF transform.
std::vector<double> sample_laplace(const LaplaceParams& p, std::int64_t n,
                                   std::uint64_t seed);

// n i.i.d. t draws via the ratio construction (standard normal over
// sqrt(chi-square / v)); requires integer v >= 3.
std::vector<double> sample_student_t(const DegreesOfFreedom& v, std::int64_t n,
                                     std::uint64_t seed);

// Empirical P(|X - mu| <= sqrt(2) b y) for the Laplace family.
McEstimate laplace_interval_mass(const LaplaceParams& p, double y, std::int64_t n,
                                 std::uint64_t seed);

// Empirical P(|X| <= y sqrt(v/(v-2))) for the t family.
McEstimate student_interval_mass(const DegreesOfFreedom& v, double y,
                                 std::int64_t n, std::uint64_t seed);

// Independent t CDF oracle: 1/2 plus adaptive quadrature of the density
// over [0, x].
double cdf_by_density_quadrature(const DegreesOfFreedom& v, double x);

}  // namespace tconc

#endif
