#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace nullfront {

/**
 * Vector of the semi-Euclidean 4-space with index 2.
 *
 * The pseudo-scalar product is <u,w> = -u1*w1 - u2*w2 + u3*w3 + u4*w4.
 * The component type is a template parameter so the same formulas run on
 * plain doubles and on truncated jets.
 */
template <typename T>
struct Vec4T {
    std::array<T, 4> c{};

    T& operator[](std::size_t i) { return c[i]; }
    const T& operator[](std::size_t i) const { return c[i]; }

    Vec4T operator+(const Vec4T& o) const {
        return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]}};
    }
    Vec4T operator-(const Vec4T& o) const {
        return {{c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}};
    }
    Vec4T operator-() const { return {{-c[0], -c[1], -c[2], -c[3]}}; }
    Vec4T operator*(const T& k) const { return {{c[0] * k, c[1] * k, c[2] * k, c[3] * k}}; }
    Vec4T& operator+=(const Vec4T& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] = c[i] + o.c[i];
        return *this;
    }
    Vec4T& operator-=(const Vec4T& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] = c[i] - o.c[i];
        return *this;
    }
};

using Vec4 = Vec4T<double>;

enum class CausalClass { Spacelike, Timelike, Lightlike };

enum class PseudoSphereKind { AdS3, S3_2, Lambda3 };

template <typename T>
T pseudo_dot(const Vec4T<T>& u, const Vec4T<T>& w) {
    return -u[0] * w[0] - u[1] * w[1] + u[2] * w[2] + u[3] * w[3];
}

inline double pseudo_norm(const Vec4& u) { return std::sqrt(std::fabs(pseudo_dot(u, u))); }

inline double sup_norm(const Vec4& u) {
    return std::max(std::max(std::fabs(u[0]), std::fabs(u[1])),
                    std::max(std::fabs(u[2]), std::fabs(u[3])));
}

inline bool all_finite(const Vec4& u) {
    return std::isfinite(u[0]) && std::isfinite(u[1]) && std::isfinite(u[2]) &&
           std::isfinite(u[3]);
}

inline CausalClass causal_character(const Vec4& u, double tol = 1e-9) {
    const double q = pseudo_dot(u, u);
    if (q > tol) return CausalClass::Spacelike;
    if (q < -tol) return CausalClass::Timelike;
    return CausalClass::Lightlike;
}

inline bool check_membership(const Vec4& u, PseudoSphereKind kind, double tol = 1e-9) {
    const double q = pseudo_dot(u, u);
    switch (kind) {
        case PseudoSphereKind::AdS3:
            return std::fabs(q + 1.0) <= tol;
        case PseudoSphereKind::S3_2:
            return std::fabs(q - 1.0) <= tol;
        case PseudoSphereKind::Lambda3:
            return std::fabs(q) <= tol && sup_norm(u) > tol;
    }
    return false;
}

namespace detail {
// 3x3 determinant of rows (a, b, c).
template <typename T>
T det3(const std::array<T, 3>& a, const std::array<T, 3>& b, const std::array<T, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

template <typename T>
std::array<T, 3> drop(const Vec4T<T>& v, std::size_t j) {
    std::array<T, 3> r{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i)
        if (i != j) r[k++] = v[i];
    return r;
}
}  // namespace detail

/**
 * Triple vector product of R^4_2: formal determinant with first row
 * (-e1, -e2, e3, e4) over the rows u, v, w.  The result is
 * pseudo-orthogonal to each argument: <u x v x w, x> = det4(x, u, v, w).
 */
template <typename T>
Vec4T<T> triple_product(const Vec4T<T>& u, const Vec4T<T>& v, const Vec4T<T>& w) {
    const T m0 = detail::det3(detail::drop(u, 0), detail::drop(v, 0), detail::drop(w, 0));
    const T m1 = detail::det3(detail::drop(u, 1), detail::drop(v, 1), detail::drop(w, 1));
    const T m2 = detail::det3(detail::drop(u, 2), detail::drop(v, 2), detail::drop(w, 2));
    const T m3 = detail::det3(detail::drop(u, 3), detail::drop(v, 3), detail::drop(w, 3));
    return {{-m0, m1, m2, -m3}};
}

/// Standard 4x4 determinant of the row stack (a, b, c, d).
template <typename T>
T det4(const Vec4T<T>& a, const Vec4T<T>& b, const Vec4T<T>& c, const Vec4T<T>& d) {
    const T m0 = detail::det3(detail::drop(b, 0), detail::drop(c, 0), detail::drop(d, 0));
    const T m1 = detail::det3(detail::drop(b, 1), detail::drop(c, 1), detail::drop(d, 1));
    const T m2 = detail::det3(detail::drop(b, 2), detail::drop(c, 2), detail::drop(d, 2));
    const T m3 = detail::det3(detail::drop(b, 3), detail::drop(c, 3), detail::drop(d, 3));
    return a[0] * m0 - a[1] * m1 + a[2] * m2 - a[3] * m3;
}

}  // namespace nullfront
