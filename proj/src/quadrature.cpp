#include "tconc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tconc {

namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the
// embedded 7-point Gauss weights, as in QUADPACK's dqk15.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double lo;
    double hi;
    double value;
    double error;
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    double result_gauss = 0.0;
    double result_kronrod = 0.0;
    const double fc = f(center);
    result_kronrod += fc * kWgk[7];
    result_gauss += fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double abscissa = half * kXgk[j];
        const double fsum = f(center - abscissa) + f(center + abscissa);
        result_kronrod += fsum * kWgk[j];
        if (j % 2 == 1) result_gauss += fsum * kWg[j / 2];
    }
    const double value = result_kronrod * half;
    double error = std::fabs((result_kronrod - result_gauss) * half);
    error = std::max(error, std::fabs(value) * 1e-16);
    return Segment{lo, hi, value, error};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_subdivisions < 1)
        throw std::domain_error("integrate: invalid QuadratureSpec");
    if (lo == hi) return 0.0;

    std::vector<Segment> segments;
    segments.push_back(gk15(f, lo, hi));

    for (int n = 0; n < spec.max_subdivisions; ++n) {
        double total = 0.0;
        double err = 0.0;
        for (const Segment& s : segments) {
            total += s.value;
            err += s.error;
        }
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(total)))
            return total;

        auto worst = std::max_element(
            segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) { return a.error < b.error; });
        const Segment seg = *worst;
        const double mid = 0.5 * (seg.lo + seg.hi);
        *worst = gk15(f, seg.lo, mid);
        segments.push_back(gk15(f, mid, seg.hi));
    }
    throw std::runtime_error("integrate: subdivision budget exhausted");
}

}  // namespace tconc
