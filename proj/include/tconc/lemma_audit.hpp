#ifndef TCONC_LEMMA_AUDIT_HPP
#define TCONC_LEMMA_AUDIT_HPP

#include <string>
#include <vector>

#include "tconc/quadrature.hpp"
#include "tconc/tinf.hpp"

namespace tconc {

// One remainder-bound verification at a sample point.  Every check is
// of the form measured < bound; slack = bound - measured must be
// strictly positive to pass.
struct CheckRecord {
    std::string lemma;
    std::string point;
    double bound;
    double measured;
    double slack;
    bool pass;
};

struct AuditReport {
    std::vector<CheckRecord> checks;
    bool all_pass;
};

// Constants of the y = sqrt(3) refinement.
struct Sqrt3Ledger {
    double d0;
    double d1;
    double d2;
    double d3;
    double Vp1;
    double Vp2;
    double vbar0;
};

Sqrt3Ledger sqrt3_ledger();

// |L(v) - 1/v - 3/(2v^2)| < 3/v^3 for v >= 100.
CheckRecord check_L_expansion(double v);

// |v^2 (ln f - E0 - E1/v)| < C1 for v >= V1(y), 1 <= x <= u(v).
CheckRecord check_logf_expansion(double v, const ThresholdY& y, double x);

// |v^2 (f e^{-E0} - 1 - E1/v)| < C2 for v >= V2(y).
CheckRecord check_f_expansion(double v, const ThresholdY& y, double x);

// |G(v,y) - 1 - (3-a)/(2v)| < C3/v^2 for v >= V3(y).
CheckRecord check_G_expansion(double v, const ThresholdY& y,
                              const QuadratureSpec& spec = {});

// G(v, sqrt(3)) > 1 + (5v - 4 d3)/(4 v^3) (>= 1) for v >= 1318.4.
CheckRecord check_sqrt3_threshold(double v);

// Same remainder as check_f_expansion at a = 3, against the d2 bound,
// valid from v >= 100.
CheckRecord check_sqrt3_f_expansion(double v, double x);

// Absolute residual of the contiguous relation
// ((v+1)/2) F(1/2,(v+3)/2;3/2;-y^2/v) - (v/2) F(1/2,(v+1)/2;3/2;-y^2/v)
//   - (1/2) (v/(v+y^2))^((v+1)/2).
double contiguous_identity_residual(double v, const ThresholdY& y);

enum class AuditPreset { Quick, Full };

AuditReport run_audit(AuditPreset preset, const QuadratureSpec& spec = {});

}  // namespace tconc

#endif
