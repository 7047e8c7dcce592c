#pragma once

#include <vector>

#include "framespec/errors.hpp"

namespace framespec {

// Roots of a scalar secular equation, ascending, each with the absolute
// residual of the defining equation at the root.
struct SecularRoots {
    std::vector<double> roots;
    std::vector<double> residuals;
};

// Both roots of (e1-u)(e2-u) + (e2-u)(e3-u) + (e1-u)(e3-u) = 0, the secular
// equation of the three-vector equiangular frame, via the stable quadratic
// formula. The discriminant e1^2+e2^2+e3^2-e1e2-e2e3-e1e3 is a sum of
// squares, so the roots are always real.
SecularRoots mercedes_roots(double e1, double e2, double e3);

// The K-1 roots of sum_i 1/(e[i] - u) = 0 for strictly increasing e, one
// bracketed inside each gap (e[i], e[i+1]), found by bisection on the
// pole-free numerator polynomial. Spacing below 1e-12 throws
// NotStrictlyIncreasing.
SecularRoots casazza_roots(const std::vector<double>& e);

// The single root of (e3-u)cos^2(beta) + (e4-u)sin^2(beta) = 0 for
// beta in the open interval (0, pi/2): u = e3 cos^2(beta) + e4 sin^2(beta).
double projected_pair_root(double e3, double e4, double beta);

}  // namespace framespec
