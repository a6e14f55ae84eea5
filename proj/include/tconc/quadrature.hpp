#ifndef TCONC_QUADRATURE_HPP
#define TCONC_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace tconc {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 200;
};

// Globally adaptive Gauss-Kronrod 7-15 integration over [lo, hi].
// Splits the segment with the largest error estimate until the summed
// error falls below max(abs_tol, rel_tol * |integral|).  Throws
// std::runtime_error when the subdivision budget is exhausted.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec = {});

}  // namespace tconc

#endif
