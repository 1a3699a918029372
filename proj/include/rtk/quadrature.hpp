#ifndef RTK_QUADRATURE_HPP
#define RTK_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace rtk {

// Thin wrappers over GSL quadrature so the rest of the code never touches
// the C interface directly.

// Fixed-order Gauss-Legendre on [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order);

// Adaptive quadrature (QAG, 61-point rule) to the given tolerances.
// Throws tolerance_error on non-convergence.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-12, double rel_tol = 1e-10);

// Nodes/weights for expectations against the standard normal law:
//   E[g(Z)] ~= sum_i w[i] * g(x[i]),  Z ~ N(0,1).
struct GaussHermiteRule {
    std::vector<double> x;
    std::vector<double> w;
};
GaussHermiteRule gauss_hermite_normal(int order);

// Gauss-Legendre nodes/weights on [a, b] as arrays (for tensor grids).
struct GaussLegendreRule {
    std::vector<double> x;
    std::vector<double> w;
};
GaussLegendreRule gauss_legendre_rule(double a, double b, int order);

} // namespace rtk

#endif
