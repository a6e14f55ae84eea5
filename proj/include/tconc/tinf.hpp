#ifndef TCONC_TINF_HPP
#define TCONC_TINF_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "tconc/quadrature.hpp"
#include "tconc/special_functions.hpp"

namespace tconc {

// Deviation multiple y > 0 together with a = y^2.  The sqrt3() factory
// pins a = 3 exactly, forcing the y = sqrt(3) branch regardless of
// float rounding of the input.
class ThresholdY {
  public:
    explicit ThresholdY(double y) : y_(y), a_(y * y) {
        if (!(y > 0.0))
            throw std::domain_error("ThresholdY: require y > 0");
    }

    static ThresholdY sqrt3() {
        ThresholdY t(1.7320508075688772);
        t.a_ = 3.0;
        return t;
    }

    double y() const { return y_; }
    double a() const { return a_; }

  private:
    double y_;
    double a_;
};

enum class Branch {
    UpToOne,     // 0 < y <= 1
    Interior,    // 1 < y < sqrt(3)
    Sqrt3,       // y = sqrt(3) (|y^2 - 3| <= 1e-12)
    AboveSqrt3,  // y > sqrt(3)
};

std::string branch_name(Branch b);

Branch classify_branch(double y);
Branch classify_branch(const ThresholdY& y);

// All quantities of the constant chain for a given y, computed in the
// order C1 -> C2 -> C3 -> V1 -> V2 -> V3 -> v0.
struct ConstantLedger {
    double C0;
    double C1;
    double C2;
    double C3;
    double V0;
    double V1;
    double V2;
    double V3;
    double v0;
};

// Throws std::domain_error at the y = sqrt(3) singularity of v0.
ConstantLedger constants_ledger(const ThresholdY& y);

// Per-degrees-of-freedom two-sided probability 2 F_v(y sqrt(v/(v-2))) - 1.
double J(int v, const ThresholdY& y);

// Quadrature criterion: G > 1 means the probability decreases from v to
// v+2, G < 1 means it increases.  Real v >= 3 allowed for audits.
double G(double v, const ThresholdY& y, const QuadratureSpec& spec = {});

// Mean-threshold infimum for the t family: identically 1/2.
double theorem_C(double y);

enum class Objective { T, H };

// Minimum of the objective over integer v in [3, v_max] together with
// the smallest attaining v.  threads == 0 picks a hardware default;
// the result is independent of the worker count.
std::pair<double, int> search_min(const ThresholdY& y, int v_max, Objective obj,
                                  int threads = 0);

struct InfimumResult {
    double value;
    std::optional<int> attained_at;  // nullopt: infimum realized as v -> inf
    Branch branch;
    std::optional<int> search_bound;
};

// Scan upper bound floor(v0(y)) + 3 (1321 for the sqrt(3) branch).
int scan_bound(const ThresholdY& y);

InfimumResult theorem_T(const ThresholdY& y, int threads = 0,
                        std::optional<int> v_max_override = std::nullopt);
InfimumResult theorem_H(const ThresholdY& y, int threads = 0,
                        std::optional<int> v_max_override = std::nullopt);

}  // namespace tconc

#endif
