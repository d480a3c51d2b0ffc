#include "spectrakit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spectrakit::bounds {

namespace {

void require_genus(int g) {
    if (g < 2)
        throw DomainError("bounds: genus must be at least 2");
}

// log(16 e^6 (g-1) g^m)
double log_choice_pool(int g, int m) {
    return std::log(16.0) + 6.0 + std::log(static_cast<double>(g - 1)) +
           m * std::log(static_cast<double>(g));
}

} // namespace

void BoundContext::validate() const {
    require_genus(g);
    if (k < 0 || k0 < 0 || k1 < 0 || k0 + k1 != k || k > 3 * g - 3)
        throw InvalidContext("BoundContext: need k0 + k1 = k <= 3g - 3, all nonnegative");
}

double ncc_bound_log(int g) {
    require_genus(g);
    return -6.0 + (g - 1) * (6.0 * std::log(12.0) - 5.0) +
           (6.0 * g - 6.0) * std::log(static_cast<double>(g - 1));
}

CcLengthBounds cc_length_bounds(int g) {
    require_genus(g);
    const double l4g = std::log(4.0 * g);
    return {2.0 * l4g, 8.0 * l4g, 14.0 * l4g, 6.0 * std::log(8.0 * g)};
}

double nextgeom_raw(int g) {
    require_genus(g);
    return 6.0 * std::log(4.0 * g) + std::asinh(1.0) +
           2.0 * std::sqrt(2.0) * std::log(1.0 + std::sqrt(2.0));
}

double przytycki_log(long abs_chi) {
    if (abs_chi < 1)
        throw DomainError("przytycki_log: |chi| must be positive");
    return std::log(2.0 * static_cast<double>(abs_chi)) +
           std::log(static_cast<double>(abs_chi) + 1.0);
}

ThinBounds thin_bounds(int g, int k0) {
    require_genus(g);
    if (k0 < 0 || k0 > 3 * g - 3)
        throw InvalidContext("thin_bounds: k0 out of range");
    ThinBounds out;
    out.przytycki_log = przytycki_log(2L * g - 2L);
    out.type1_exact_log = std::log(2.0) + std::log(8.0 * g - 8.0) + std::log(2.0 * g - 1.0);
    out.type1_envelope_log = std::log(32.0) + 2.0 * std::log(static_cast<double>(g - 1));
    out.type1_envelope_holds = out.type1_exact_log <= out.type1_envelope_log;
    out.type2_log = std::log(4.0) + 12.0 * std::log(8.0 * g);
    out.thin_log = (k0 + 1) * std::log(8.0) + 12.0 * k0 * std::log(static_cast<double>(g));
    return out;
}

double bigcount_log(const BoundContext& ctx) {
    ctx.validate();
    const int g = ctx.g;
    double total = ncc_bound_log(g);
    total += ctx.k * log_choice_pool(g, 2);
    total += (6.0 * g - 6.0) * log_choice_pool(g, 8);
    total += ctx.k1 * log_choice_pool(g, 14);
    total += ctx.k1 * std::log(2.0);
    total += (ctx.k0 + 1) * std::log(8.0) + 12.0 * ctx.k0 * std::log(static_cast<double>(g));
    return total;
}

double maincount_bound_log(int g) {
    require_genus(g);
    return 154.0 * g * std::log(static_cast<double>(g));
}

double initial_sweep_count_log(int g) {
    require_genus(g);
    return log_choice_pool(g, 14);
}

double question_budget_log(int g, double log_m) {
    require_genus(g);
    // log( (M - 1) + 16e^6(g-1)g^14 + (3g - 3) ) by log-sum-exp; the -1 is
    // applied exactly when M is small enough to represent.
    double log_m_minus_1;
    if (log_m < 0.0)
        throw DomainError("question_budget_log: family size must be at least 1");
    if (log_m == 0.0)
        log_m_minus_1 = -std::numeric_limits<double>::infinity(); // M = 1
    else if (log_m < 700.0)
        log_m_minus_1 = std::log(std::expm1(log_m));
    else
        log_m_minus_1 = log_m;
    const double sweep = initial_sweep_count_log(g);
    const double tail = std::log(3.0 * g - 3.0);
    const double top = std::max({log_m_minus_1, sweep, tail});
    return top + std::log(std::exp(log_m_minus_1 - top) + std::exp(sweep - top) +
                          std::exp(tail - top));
}

Section5Constants section5_constants(int g) {
    require_genus(g);
    Section5Constants out;
    out.log_a = 6.0 * std::log(3.0) + 75.0 * std::log(2.0) + 67.0;
    out.b = 114;
    out.intermediate_log = std::log(8.0) - 6.0 + (g - 1) * out.log_a +
                           114.0 * (g - 1) * std::log(static_cast<double>(g));
    return out;
}

std::vector<BoundContext> admissible_contexts(int g) {
    require_genus(g);
    std::vector<BoundContext> out;
    for (int k = 0; k <= 3 * g - 3; ++k)
        for (int k0 = 0; k0 <= k; ++k0)
            out.push_back({g, k, k0, k - k0});
    return out;
}

} // namespace spectrakit::bounds
