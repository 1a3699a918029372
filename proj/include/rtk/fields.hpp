#ifndef RTK_FIELDS_HPP
#define RTK_FIELDS_HPP

#include "rtk/common.hpp"

#include <vector>

namespace rtk {

// Chemoattractant landscapes M(x) with analytic gradient and Hessian.
//
// SqrtRadial is the canonical admissible field: M(x) = m0 - scale*sqrt(1+|x|^2)
// tends to -inf at a linear rate, has bounded gradient, Hessian vanishing at
// infinity and bounded M*Hess. LogGaussian (M = m0 - |x|^2/(2 scale^2), the log
// of a Gaussian signal) deliberately violates the bounded-gradient clause and
// serves as the negative control. CustomCoefficients generalises SqrtRadial
// anisotropically: M = m0 - scale*sqrt(1 + sum_i a_i x_i^2).
enum class FieldKind { SqrtRadial, LogGaussian, CustomCoefficients };

struct ChemoField {
    FieldKind kind = FieldKind::SqrtRadial;
    double m0 = 0.0;
    double scale = 1.0;
    int dim = 2;
    std::vector<double> coeffs; // CustomCoefficients: per-axis a_i > 0

    double eval(const Vec& x) const;
    Vec grad(const Vec& x) const;
    Mat hess(const Vec& x) const;
};

struct FieldEval {
    double M;
    Vec grad;
    Mat hess;
};

// Analytic (M, grad, hess) triple; checks dimension/finiteness of x.
FieldEval field_eval(const ChemoField& field, const Vec& x);

struct HypothesisReport {
    double sup_grad = 0.0;   // max sampled |grad M|
    double m_star = 0.0;     // best certified far-field gradient lower bound
    double R = 0.0;          // radius from which |grad M| >= m_star holds
    double sup_hess = 0.0;   // max sampled operator norm of Hess M
    double sup_M_hess = 0.0; // max sampled |M| * |Hess M|
    bool pass_H3 = false;
    bool pass_MHess_bounded = false;
};

// Sampling-based certificate for the far-field hypotheses. Radii are scanned
// on a uniform grid up to probe_radius with a deterministic low-discrepancy
// direction set per shell. (R, m_star) is the maximin certificate: m_star is
// the largest gradient lower bound that holds on a sampled shell [R,
// probe_radius], with R the smallest radius attaining it. Degenerate fields
// (grad M identically 0 on the sample) report m_star = 0, pass_H3 = false,
// without throwing. Trend flags (signal decay, gradient boundedness, Hessian
// decay, M*Hess boundedness) compare the outer sampled quarter against the
// preceding one, since only the sampled behaviour is observable.
HypothesisReport check_hypotheses(const ChemoField& field, double probe_radius,
                                  int grid_resolution);

} // namespace rtk

#endif
