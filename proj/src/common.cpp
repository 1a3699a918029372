#include "rtk/common.hpp"

#include <algorithm>

namespace rtk {

double sym_op_norm(const Mat& a) {
    const int n = a.dim();
    if (n == 1) return std::fabs(a(0, 0));
    if (n == 2) {
        const double tr = a(0, 0) + a(1, 1);
        const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4 * det));
        return std::max(std::fabs((tr + disc) / 2), std::fabs((tr - disc) / 2));
    }
    // d = 3: eigenvalues of a symmetric matrix by the trigonometric method
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    double p2 = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double d = a(i, j) - (i == j ? q : 0.0);
            p2 += d * d;
        }
    const double p = std::sqrt(p2 / 6.0);
    if (p < 1e-300) return std::fabs(q);
    Mat b(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b(i, j) = (a(i, j) - (i == j ? q : 0.0)) / p;
    const double detb = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    const double r = std::clamp(detb / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2 * p * std::cos(phi);
    const double e3 = q + 2 * p * std::cos(phi + 2.0 * pi / 3.0);
    const double e2 = 3 * q - e1 - e3;
    return std::max({std::fabs(e1), std::fabs(e2), std::fabs(e3)});
}

} // namespace rtk
