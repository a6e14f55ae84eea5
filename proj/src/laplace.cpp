#include "tconc/laplace.hpp"

#include <cmath>
#include <string>

namespace tconc {

namespace {

void require_positive_y(double y, const char* where) {
    if (!(y > 0.0))
        throw std::domain_error(std::string(where) + ": require y > 0");
}

}  // namespace

double laplace_cdf(const LaplaceParams& p, double x) {
    if (x < p.mu) return 0.5 * std::exp((x - p.mu) / p.b);
    return 1.0 - 0.5 * std::exp(-(x - p.mu) / p.b);
}

double laplace_C(double y) {
    require_positive_y(y, "laplace_C");
    return std::fabs(y - 1.0) <= 1e-12 ? 0.5 : 0.0;
}

double laplace_T(double y) {
    require_positive_y(y, "laplace_T");
    return -std::expm1(-std::sqrt(2.0) * y);
}

double laplace_H(double y) {
    require_positive_y(y, "laplace_H");
    return std::exp(-std::sqrt(2.0) * y);
}

}  // namespace tconc
