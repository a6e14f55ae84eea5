#include "tconc/mc_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tconc/quadrature.hpp"

namespace tconc {

namespace rng {

std::uint64_t word(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t index) {
    return (static_cast<double>(word(seed, index) >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace rng

namespace {

void require_count(std::int64_t n) {
    if (n < 1) throw std::domain_error("mc_oracle: require n >= 1");
}

McEstimate make_estimate(std::int64_t hits, std::int64_t n, std::uint64_t seed) {
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return McEstimate{p, n, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), seed};
}

}  // namespace

std::vector<double> sample_laplace(const LaplaceParams& p, std::int64_t n,
                                   std::uint64_t seed) {
    require_count(n);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const double u = rng::uniform01(seed, static_cast<std::uint64_t>(i));
        out[static_cast<std::size_t>(i)] =
            u < 0.5 ? p.mu + p.b * std::log(2.0 * u)
                    : p.mu - p.b * std::log(2.0 * (1.0 - u));
    }
    return out;
}

std::vector<double> sample_student_t(const DegreesOfFreedom& v, std::int64_t n,
                                     std::uint64_t seed) {
    require_count(n);
    if (v.v != std::floor(v.v))
        throw std::domain_error("sample_student_t: sampler requires integer v");
    const int df = static_cast<int>(v.v);

    // Sample i consumes a fixed block of uniforms: one Box-Muller pair
    // per two normals, df + 1 normals per draw.
    const int pairs = (df + 2) / 2;
    const std::uint64_t stride = static_cast<std::uint64_t>(2 * pairs);

    std::vector<double> out(static_cast<std::size_t>(n));
    std::vector<double> normals(static_cast<std::size_t>(2 * pairs));
    for (std::int64_t i = 0; i < n; ++i) {
        const std::uint64_t base = static_cast<std::uint64_t>(i) * stride;
        for (int j = 0; j < pairs; ++j) {
            const double u1 = rng::uniform01(seed, base + 2 * j);
            const double u2 = rng::uniform01(seed, base + 2 * j + 1);
            const double r = std::sqrt(-2.0 * std::log(u1));
            const double th = 2.0 * std::numbers::pi * u2;
            normals[static_cast<std::size_t>(2 * j)] = r * std::cos(th);
            normals[static_cast<std::size_t>(2 * j) + 1] = r * std::sin(th);
        }
        double chi2 = 0.0;
        for (int k = 1; k <= df; ++k)
            chi2 += normals[static_cast<std::size_t>(k)] * normals[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(i)] = normals[0] / std::sqrt(chi2 / df);
    }
    return out;
}

McEstimate laplace_interval_mass(const LaplaceParams& p, double y, std::int64_t n,
                                 std::uint64_t seed) {
    if (!(y > 0.0)) throw std::domain_error("laplace_interval_mass: require y > 0");
    const double radius = std::sqrt(2.0) * p.b * y;
    std::int64_t hits = 0;
    for (const double x : sample_laplace(p, n, seed))
        if (std::fabs(x - p.mu) <= radius) ++hits;
    return make_estimate(hits, n, seed);
}

McEstimate student_interval_mass(const DegreesOfFreedom& v, double y,
                                 std::int64_t n, std::uint64_t seed) {
    if (!(y > 0.0)) throw std::domain_error("student_interval_mass: require y > 0");
    const double radius = y * std::sqrt(1.0 + 2.0 / (v.v - 2.0));
    std::int64_t hits = 0;
    for (const double x : sample_student_t(v, n, seed))
        if (std::fabs(x) <= radius) ++hits;
    return make_estimate(hits, n, seed);
}

double cdf_by_density_quadrature(const DegreesOfFreedom& v, double x) {
    if (x == 0.0) return 0.5;
    const double vv = v.v;
    const double log_norm = log_gamma(0.5 * (vv + 1.0)) - log_gamma(0.5 * vv) -
                            0.5 * std::log(vv * std::numbers::pi);
    auto density = [vv, log_norm](double t) {
        return std::exp(log_norm - 0.5 * (vv + 1.0) * std::log1p(t * t / vv));
    };
    QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-12;
    spec.max_subdivisions = 400;
    const double mass = integrate(density, 0.0, std::fabs(x), spec);
    return x > 0.0 ? 0.5 + mass : 0.5 - mass;
}

}  // namespace tconc
