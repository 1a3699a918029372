#include "rtk/quadrature.hpp"
#include "rtk/common.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <mutex>

namespace rtk {

namespace {

// GSL aborts on error by default; switch that off once, process-wide.
void disable_gsl_abort() {
    static std::once_flag flag;
    std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

double trampoline(double x, void* params) {
    auto* f = static_cast<const std::function<double(double)>*>(params);
    return (*f)(x);
}

} // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order) {
    disable_gsl_abort();
    gsl_integration_glfixed_table* tbl =
        gsl_integration_glfixed_table_alloc(static_cast<size_t>(order));
    double xi, wi, sum = 0.0;
    for (size_t i = 0; i < static_cast<size_t>(order); ++i) {
        gsl_integration_glfixed_point(a, b, i, &xi, &wi, tbl);
        sum += wi * f(xi);
    }
    gsl_integration_glfixed_table_free(tbl);
    return sum;
}

GaussLegendreRule gauss_legendre_rule(double a, double b, int order) {
    disable_gsl_abort();
    gsl_integration_glfixed_table* tbl =
        gsl_integration_glfixed_table_alloc(static_cast<size_t>(order));
    GaussLegendreRule r;
    r.x.resize(static_cast<size_t>(order));
    r.w.resize(static_cast<size_t>(order));
    for (size_t i = 0; i < static_cast<size_t>(order); ++i)
        gsl_integration_glfixed_point(a, b, i, &r.x[i], &r.w[i], tbl);
    gsl_integration_glfixed_table_free(tbl);
    return r;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol) {
    disable_gsl_abort();
    constexpr size_t limit = 1024;
    gsl_integration_workspace* ws = gsl_integration_workspace_alloc(limit);
    gsl_function gf;
    gf.function = &trampoline;
    gf.params = const_cast<std::function<double(double)>*>(&f);
    double result = 0.0, abserr = 0.0;
    int status =
        gsl_integration_qag(&gf, a, b, abs_tol, rel_tol, limit, GSL_INTEG_GAUSS61, ws, &result, &abserr);
    gsl_integration_workspace_free(ws);
    if (status != GSL_SUCCESS && status != GSL_EROUND)
        throw tolerance_error("adaptive quadrature failed to converge (gsl status " +
                              std::to_string(status) + ")");
    return result;
}

GaussHermiteRule gauss_hermite_normal(int order) {
    disable_gsl_abort();
    const gsl_integration_fixed_type* type = gsl_integration_fixed_hermite;
    // weight (x-a)^alpha e^{-b(x-a)^2} with a=0, b=1: nodes for e^{-x^2}
    gsl_integration_fixed_workspace* ws =
        gsl_integration_fixed_alloc(type, static_cast<size_t>(order), 0.0, 1.0, 0.0, 0.0);
    const double* nodes = gsl_integration_fixed_nodes(ws);
    const double* weights = gsl_integration_fixed_weights(ws);
    GaussHermiteRule r;
    r.x.resize(static_cast<size_t>(order));
    r.w.resize(static_cast<size_t>(order));
    const double inv_sqrt_pi = 1.0 / std::sqrt(pi);
    for (size_t i = 0; i < static_cast<size_t>(order); ++i) {
        // map weight e^{-x^2} -> standard normal: z = sqrt(2) x
        r.x[i] = std::sqrt(2.0) * nodes[i];
        r.w[i] = weights[i] * inv_sqrt_pi;
    }
    gsl_integration_fixed_free(ws);
    return r;
}

} // namespace rtk
