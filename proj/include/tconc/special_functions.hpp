#ifndef TCONC_SPECIAL_FUNCTIONS_HPP
#define TCONC_SPECIAL_FUNCTIONS_HPP

#include <stdexcept>

namespace tconc {

// Real degrees of freedom, restricted to v >= 3.
struct DegreesOfFreedom {
    double v;

    explicit DegreesOfFreedom(double v_) : v(v_) {
        if (!(v >= 3.0))
            throw std::domain_error("DegreesOfFreedom: require v >= 3");
    }
};

// Arguments of the Gauss hypergeometric series F(a, b; c; z), |z| < 1.
struct HypergeometricArgs {
    double a;
    double b;
    double c;
    double z;
};

// Natural log of the gamma function, x > 0.
double log_gamma(double x);

// Standard normal distribution function, evaluated through erfc for
// tail accuracy.
double normal_cdf(double x);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation
// with the symmetry swap I_x(a,b) = 1 - I_{1-x}(b,a) when
// x > (a+1)/(a+b+2).
double reg_inc_beta(double a, double b, double x);

// Partial sums of the defining hypergeometric series.  Terminates when
// the next term drops below 1e-16 relative to the partial sum (or
// 1e-300 absolute); throws on the 100000-term cap.
double gauss_2f1(const HypergeometricArgs& args);

// Student's t distribution function for v >= 3 via the incomplete
// beta relation.  Valid for all finite x.
double student_t_cdf(const DegreesOfFreedom& v, double x);

}  // namespace tconc

#endif
