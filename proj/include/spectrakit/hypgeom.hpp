#pragma once

#include <array>
#include <cmath>

#include "spectrakit/errors.hpp"

namespace spectrakit::hypgeom {

constexpr double kDetTolerance = 1e-9;
constexpr double kHyperbolicMargin = 1e-12;

// A real 2x2 matrix of determinant one acting on the upper half-plane.
// The determinant is renormalized on construction; orientation-reversing
// input (det <= 0) is rejected.
struct MobiusTransform {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    MobiusTransform() = default;
    MobiusTransform(double a_, double b_, double c_, double d_);

    static MobiusTransform identity() { return {}; }

    // No determinant validation: for values already known to be unimodular
    // (products and inverses of unit-determinant matrices), where the naive
    // ad - bc suffers cancellation once entries are large.
    static MobiusTransform raw(double a_, double b_, double c_, double d_) {
        MobiusTransform m;
        m.a = a_;
        m.b = b_;
        m.c = c_;
        m.d = d_;
        return m;
    }

    // Translation by signed distance s along the imaginary axis (0 -> inf).
    static MobiusTransform axis_translation(double s);

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
    bool is_hyperbolic() const { return std::fabs(trace()) > 2.0 + kHyperbolicMargin; }

    MobiusTransform inverse() const { return raw(d, -b, -c, a); }

    // Image of a point on the real axis (the circle at infinity).
    double apply_real(double x) const;

    // Image of an interior point z = x + iy, y > 0.
    std::array<double, 2> apply(double x, double y) const;

    friend MobiusTransform operator*(const MobiusTransform& l, const MobiusTransform& r) {
        return raw(l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                   l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d);
    }
};

// Sup-norm distance to +/-identity, whichever is closer.
double distance_to_identity(const MobiusTransform& m);

// Translation length 2*arccosh(|tr|/2) of a hyperbolic element.
// Throws NotHyperbolic for elliptic/parabolic input.
double trace_to_length(const MobiusTransform& m);

// Length of the closed geodesic with |trace| = t, t > 2.
double abs_trace_to_length(double abs_trace);

// Half-width arcsinh(1/sinh(len/2)) of the embedded collar around a simple
// closed geodesic of length len.
double collar_width(double len);

// Length len*coth(len/2) of either boundary curve of that collar.
double collar_boundary_length(double len);

// Upper bound log(sinh(len/2)) on the distance between a geodesic simple
// loop of length len and the collar of its geodesic representative.
// Negative values are fine: the bound is vacuous but valid.
double loop_collar_distance_bound(double loop_len);

// Shortest-loop radius arccosh(1/(2 sin(pi/(12g-6)))) at genus g >= 2.
double bavard_radius(int g);

// Three pairwise non-adjacent sides of a right-angled hexagon.
struct HexagonAlternatingSides {
    double s1 = 1.0, s2 = 1.0, s3 = 1.0;

    HexagonAlternatingSides() = default;
    HexagonAlternatingSides(double s1_, double s2_, double s3_);
};

// The remaining alternating triple (t1, t2, t3), indexed so that tk is the
// side opposite sk, i.e. cosh(tk) = (cosh sk + cosh si cosh sj)/(sinh si sinh sj).
// Applying the map twice returns the input triple.
HexagonAlternatingSides hexagon_complete(const HexagonAlternatingSides& sides);

// Length of the orthogeodesic between the first two cuffs of the pair of
// pants with boundary lengths (cuff1, cuff2, chain_len).
double arc_length_from_chain(double cuff1, double cuff2, double chain_len);

namespace detail {

// Hyperbolic distance between interior points of the upper half-plane.
double distance(double x1, double y1, double x2, double y2);

} // namespace detail

} // namespace spectrakit::hypgeom
