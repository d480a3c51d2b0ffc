#pragma once

#include <vector>

#include "spectrakit/surface.hpp"

namespace spectrakit::mcshane {

using surface::FuchsianGroup;
using surface::Word;

// Arguments of the gap functions: x is the length of the boundary curve the
// identity is written on, y and z the other two boundary lengths of the
// embedded pair of pants.
struct GapInputs {
    double x = 1.0, y = 1.0, z = 1.0;

    GapInputs() = default;
    GapInputs(double x_, double y_, double z_);
};

// mu(x,y,z) = (4/x) arctanh( sinh(x/2) / (cosh(x/2) + e^{(y+z)/2}) ).
// Value in (0,1), strictly decreasing in y and z.
double mu(const GapInputs& in);

// eta(x,y,z) = 1 - (2/x) arctanh( sinh(x/2)sinh(y/2) /
//                                 (cosh(z/2) + cosh(x/2)cosh(y/2)) ).
double eta(const GapInputs& in);

// Traces of A, B, AB for a one-holed torus group. The quadratic form
// ta^2 + tb^2 + tab^2 - ta tb tab is constant along the triple moves; it
// equals 2 minus the (positive) boundary trace.
struct MarkovTriple {
    double ta = 3.0, tb = 3.0, tab = 6.0;

    MarkovTriple() = default;
    MarkovTriple(double ta_, double tb_, double tab_);

    double invariant() const { return ta * ta + tb * tb + tab * tab - ta * tb * tab; }
    double boundary_trace() const { return 2.0 - invariant(); }
};

struct SimpleGeodesic {
    Word word;
    double trace = 0.0;
    double length = 0.0;
};

// All unoriented simple closed geodesics of length <= cutoff on a one-holed
// torus, generated by the trace-triple move (u,v,w) -> (u,v,uv-w) on the two
// slope trees seeded at (A,B) and (A,B^-1), pruned once every trace passes
// 2 cosh(cutoff/2) in the monotone regime.
std::vector<SimpleGeodesic> enumerate_simple_torus(const FuchsianGroup& group, double cutoff);

struct IdentityReport {
    double boundary_length = 0.0;
    double cutoff = 0.0;
    long terms = 0;
    double partial_sum = 0.0;
    double deficit = 1.0;
};

// Partial sums of the boundary identity on a one-holed torus: every simple
// closed geodesic gamma contributes mu(x, l(gamma), l(gamma)); the deficit
// 1 - sum is positive and decreasing in the cutoff.
IdentityReport verify_identity(const FuchsianGroup& group, double boundary_length, double cutoff);

} // namespace spectrakit::mcshane
