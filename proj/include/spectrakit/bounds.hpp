#pragma once

#include <vector>

#include "spectrakit/errors.hpp"

namespace spectrakit::bounds {

// Curve-and-chain cardinalities at genus g: k curves split into k0 short
// ones and k1 long ones, with k0 + k1 = k <= 3g - 3.
struct BoundContext {
    int g = 2;
    int k = 0;
    int k0 = 0;
    int k1 = 0;

    void validate() const;
};

// log of the bound (1/e^6) (12^6/e^5)^{g-1} (g-1)^{6g-6} on the number of
// topological types of marked curve and chain systems.
double ncc_bound_log(int g);

// Length bounds for short curve and chain systems and their companions:
// curves 2log(4g), chains 8log(4g), transversals 14log(4g), and the pants
// boundary bound 6log(8g).
struct CcLengthBounds {
    double curve = 0.0;
    double chain = 0.0;
    double transversal = 0.0;
    double nextgeom = 0.0;
};
CcLengthBounds cc_length_bounds(int g);

// The un-rounded form 6log(4g) + arcsinh(1) + 2 sqrt(2) log(1+sqrt(2)) that
// the 6log(8g) envelope rounds up.
double nextgeom_raw(int g);

// Thin-part counting bounds. The type (I) envelope 16(g-1)^2 fails against
// the exact count (8g-8)(2g-1) at g = 2, so both forms are reported along
// with the comparison instead of asserting it.
struct ThinBounds {
    double przytycki_log = 0.0;      // 2|chi|(|chi|+1), |chi| = 2g-2
    double type1_exact_log = 0.0;    // 2(8g-8)(2g-1)
    double type1_envelope_log = 0.0; // 32(g-1)^2
    bool type1_envelope_holds = false;
    double type2_log = 0.0; // 4(8g)^12
    double thin_log = 0.0;  // 8^{k0+1} g^{12 k0}
};
ThinBounds thin_bounds(int g, int k0);

// log of the Przytycki arc bound 2|chi|(|chi|+1) for a given |chi|.
double przytycki_log(long abs_chi);

// log of the full isometry-type count
//   N_cc(g) (16e^6(g-1)g^2)^k (16e^6(g-1)g^8)^{6g-6} (16e^6(g-1)g^14)^{k1}
//   2^{k1} 8^{k0+1} g^{12 k0}
double bigcount_log(const BoundContext& ctx);

// log g^{154 g}.
double maincount_bound_log(int g);

// log of the first-sweep question count 16 e^6 (g-1) g^14.
double initial_sweep_count_log(int g);

// log of the total question count M - 1 + 16e^6(g-1)g^14 + 3g - 3, where the
// family size M is passed as log M.
double question_budget_log(int g, double log_m);

// The intermediate envelope (8/e^6) A^{g-1} g^{B(g-1)} with A = 3^6 2^75 e^67
// and B = 114, reported for reference.
struct Section5Constants {
    double log_a = 0.0;
    int b = 114;
    double intermediate_log = 0.0;
};
Section5Constants section5_constants(int g);

// All admissible (k, k0, k1) splittings at genus g.
std::vector<BoundContext> admissible_contexts(int g);

} // namespace spectrakit::bounds
