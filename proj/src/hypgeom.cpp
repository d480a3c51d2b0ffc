#include "spectrakit/hypgeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spectrakit::hypgeom {

MobiusTransform::MobiusTransform(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    const double det = a * d - b * c;
    if (!std::isfinite(det) || det <= 0.0)
        throw DomainError("MobiusTransform: determinant must be positive and finite");
    if (std::fabs(det - 1.0) > kDetTolerance) {
        const double s = 1.0 / std::sqrt(det);
        a *= s;
        b *= s;
        c *= s;
        d *= s;
    }
}

MobiusTransform MobiusTransform::axis_translation(double s) {
    return MobiusTransform(std::exp(s / 2.0), 0.0, 0.0, std::exp(-s / 2.0));
}

double MobiusTransform::apply_real(double x) const {
    const double den = c * x + d;
    if (den == 0.0)
        return std::numeric_limits<double>::infinity();
    return (a * x + b) / den;
}

std::array<double, 2> MobiusTransform::apply(double x, double y) const {
    // (az+b)(conj(cz+d)) / |cz+d|^2
    const double u = c * x + d;
    const double v = c * y;
    const double n = u * u + v * v;
    const double rx = ((a * x + b) * u + a * y * v) / n;
    const double ry = y * (a * d - b * c) / n;
    return {rx, ry};
}

double distance_to_identity(const MobiusTransform& m) {
    const double plus = std::max({std::fabs(m.a - 1.0), std::fabs(m.b), std::fabs(m.c),
                                  std::fabs(m.d - 1.0)});
    const double minus = std::max({std::fabs(m.a + 1.0), std::fabs(m.b), std::fabs(m.c),
                                   std::fabs(m.d + 1.0)});
    return std::min(plus, minus);
}

double abs_trace_to_length(double abs_trace) {
    if (!(abs_trace > 2.0 + kHyperbolicMargin))
        throw NotHyperbolic("abs_trace_to_length: |trace| <= 2, element has no closed geodesic");
    return 2.0 * std::acosh(abs_trace / 2.0);
}

double trace_to_length(const MobiusTransform& m) {
    return abs_trace_to_length(std::fabs(m.trace()));
}

double collar_width(double len) {
    if (!(len > 0.0))
        throw DomainError("collar_width: length must be positive");
    return std::asinh(1.0 / std::sinh(len / 2.0));
}

double collar_boundary_length(double len) {
    if (!(len > 0.0))
        throw DomainError("collar_boundary_length: length must be positive");
    return len / std::tanh(len / 2.0);
}

double loop_collar_distance_bound(double loop_len) {
    if (!(loop_len > 0.0))
        throw DomainError("loop_collar_distance_bound: length must be positive");
    return std::log(std::sinh(loop_len / 2.0));
}

double bavard_radius(int g) {
    if (g < 2)
        throw DomainError("bavard_radius: genus must be at least 2");
    const double angle = M_PI / (12.0 * g - 6.0);
    return std::acosh(1.0 / (2.0 * std::sin(angle)));
}

HexagonAlternatingSides::HexagonAlternatingSides(double s1_, double s2_, double s3_)
    : s1(s1_), s2(s2_), s3(s3_) {
    if (!(s1 > 0.0) || !(s2 > 0.0) || !(s3 > 0.0))
        throw DomainError("HexagonAlternatingSides: sides must be positive");
}

static double hexagon_opposite(double sk, double si, double sj) {
    const double num = std::cosh(sk) + std::cosh(si) * std::cosh(sj);
    const double den = std::sinh(si) * std::sinh(sj);
    return std::acosh(num / den);
}

HexagonAlternatingSides hexagon_complete(const HexagonAlternatingSides& sides) {
    return HexagonAlternatingSides(hexagon_opposite(sides.s1, sides.s2, sides.s3),
                                   hexagon_opposite(sides.s2, sides.s3, sides.s1),
                                   hexagon_opposite(sides.s3, sides.s1, sides.s2));
}

double arc_length_from_chain(double cuff1, double cuff2, double chain_len) {
    if (!(cuff1 > 0.0) || !(cuff2 > 0.0) || !(chain_len > 0.0))
        throw DomainError("arc_length_from_chain: lengths must be positive");
    const HexagonAlternatingSides halves(cuff1 / 2.0, cuff2 / 2.0, chain_len / 2.0);
    return hexagon_complete(halves).s3;
}

namespace detail {

double distance(double x1, double y1, double x2, double y2) {
    const double dx = x2 - x1;
    const double dy = y2 - y1;
    return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * y1 * y2));
}

} // namespace detail

} // namespace spectrakit::hypgeom
