#ifndef RTK_COMMON_HPP
#define RTK_COMMON_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rtk {

inline constexpr double pi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Error taxonomy. Everything derives from std::runtime_error so callers can
// catch coarsely; the CLI maps these onto exit codes.
// ---------------------------------------------------------------------------

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct simulation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct tolerance_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_applicable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct selection_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct fit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct diagnostic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Small fixed-capacity vector for positions/velocities, d <= 3.
// ---------------------------------------------------------------------------

struct Vec {
    std::array<double, 3> c{0.0, 0.0, 0.0};
    int n = 0;

    Vec() = default;
    explicit Vec(int dim) : n(dim) {}
    Vec(double x) : c{x, 0, 0}, n(1) {}
    Vec(double x, double y) : c{x, y, 0}, n(2) {}
    Vec(double x, double y, double z) : c{x, y, z}, n(3) {}

    double& operator[](int i) { return c[static_cast<size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<size_t>(i)]; }
    int dim() const { return n; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < n; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < n; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < n; ++i) c[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }

    bool finite() const {
        for (int i = 0; i < n; ++i)
            if (!std::isfinite(c[i])) return false;
        return true;
    }
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0;
    for (int i = 0; i < a.n; ++i) s += a.c[i] * b.c[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

// ---------------------------------------------------------------------------
// Small symmetric matrix (Hessians), d <= 3, row-major.
// ---------------------------------------------------------------------------

struct Mat {
    std::array<double, 9> m{};
    int n = 0;

    Mat() = default;
    explicit Mat(int dim) : n(dim) {}

    double& operator()(int i, int j) { return m[static_cast<size_t>(i * n + j)]; }
    double operator()(int i, int j) const { return m[static_cast<size_t>(i * n + j)]; }
    int dim() const { return n; }

    static Mat identity(int dim) {
        Mat a(dim);
        for (int i = 0; i < dim; ++i) a(i, i) = 1.0;
        return a;
    }
};

inline Vec matvec(const Mat& a, const Vec& x) {
    Vec y(a.n);
    for (int i = 0; i < a.n; ++i) {
        double s = 0;
        for (int j = 0; j < a.n; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

inline double quad_form(const Vec& v, const Mat& a) { return dot(v, matvec(a, v)); }

// Spectral (operator) norm of a symmetric matrix, closed form for d <= 3.
double sym_op_norm(const Mat& a);

// Signed angle of a 2-vector in (-pi, pi].
inline double angle_of(const Vec& v) { return std::atan2(v[1], v[0]); }

// Wrap an angle into (-pi, pi].
inline double wrap_angle(double t) {
    t = std::fmod(t + pi, 2 * pi);
    if (t <= 0) t += 2 * pi;
    return t - pi;
}

// Ceiling with a guard against values like 12.000000000000002 produced by
// division of floating-point multiples.
inline long long safe_ceil(double x) { return static_cast<long long>(std::ceil(x - 1e-9)); }

} // namespace rtk

#endif
