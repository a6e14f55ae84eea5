#ifndef TCONC_LAPLACE_HPP
#define TCONC_LAPLACE_HPP

#include <stdexcept>

namespace tconc {

struct LaplaceParams {
    double mu;
    double b;

    LaplaceParams(double mu_, double b_) : mu(mu_), b(b_) {
        if (!(b > 0.0))
            throw std::domain_error("LaplaceParams: require scale b > 0");
    }
};

double laplace_cdf(const LaplaceParams& p, double x);

// Mean-threshold infimum: 1/2 at y = 1 (within 1e-12), 0 elsewhere.
// The discontinuity at y = 1 is structural.
double laplace_C(double y);

// Concentration infimum 1 - exp(-sqrt(2) y).
double laplace_T(double y);

// Anti-concentration infimum exp(-sqrt(2) y).
double laplace_H(double y);

}  // namespace tconc

#endif
