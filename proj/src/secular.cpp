#include "framespec/secular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace framespec {

namespace {

double mercedes_residual(double e1, double e2, double e3, double u) {
    return (e1 - u) * (e2 - u) + (e2 - u) * (e3 - u) + (e1 - u) * (e3 - u);
}

}  // namespace

SecularRoots mercedes_roots(double e1, double e2, double e3) {
    // Expanded: 3u^2 - 2(e1+e2+e3)u + (e1e2 + e2e3 + e1e3) = 0.
    const double s = e1 + e2 + e3;
    const double p = e1 * e2 + e2 * e3 + e1 * e3;
    const double disc = std::max(s * s - 3.0 * p, 0.0);
    const double sq = std::sqrt(disc);
    // Larger-magnitude root first, the other by the product of roots, which
    // avoids cancellation between s and sq.
    double big, small;
    if (s >= 0.0) {
        big = (s + sq) / 3.0;
        small = (big == 0.0) ? 0.0 : (p / 3.0) / big;
    } else {
        big = (s - sq) / 3.0;
        small = (big == 0.0) ? 0.0 : (p / 3.0) / big;
    }
    SecularRoots out;
    out.roots = {std::min(big, small), std::max(big, small)};
    for (double u : out.roots) out.residuals.push_back(std::abs(mercedes_residual(e1, e2, e3, u)));
    return out;
}

namespace {

// Numerator polynomial of sum_i 1/(e[i] - u): sum_i prod_{k != i} (e[k] - u).
// Shares every root with the rational function inside the gaps while staying
// finite at the poles.
double gap_polynomial(const std::vector<double>& e, double u) {
    double total = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        double prod = 1.0;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (k != i) prod *= e[k] - u;
        }
        total += prod;
    }
    return total;
}

double rational_value(const std::vector<double>& e, double u) {
    double total = 0.0;
    for (double ek : e) total += 1.0 / (ek - u);
    return total;
}

}  // namespace

SecularRoots casazza_roots(const std::vector<double>& e) {
    const std::size_t k = e.size();
    if (k < 2) throw NotStrictlyIncreasing("casazza_roots: need at least two coefficients");
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (e[i + 1] - e[i] < 1e-12)
            throw NotStrictlyIncreasing("casazza_roots: spacing below resolution at index " +
                                        std::to_string(i));

    SecularRoots out;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        double lo = e[i], hi = e[i + 1];
        double flo = gap_polynomial(e, lo);
        double root = 0.5 * (lo + hi);
        for (int iter = 0; iter < 200; ++iter) {
            root = 0.5 * (lo + hi);
            if (root == lo || root == hi) break;  // interval at double resolution
            const double fm = gap_polynomial(e, root);
            if (fm == 0.0) break;
            if ((fm > 0.0) == (flo > 0.0)) {
                lo = root;
                flo = fm;
            } else {
                hi = root;
            }
        }
        out.roots.push_back(root);
        out.residuals.push_back(std::abs(rational_value(e, root)));
    }
    return out;
}

double projected_pair_root(double e3, double e4, double beta) {
    if (!(beta > 0.0 && beta < std::numbers::pi / 2.0))
        throw BetaOutOfRange("projected_pair_root: beta must lie strictly inside (0, pi/2)");
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    return e3 * c * c + e4 * s * s;
}

}  // namespace framespec
