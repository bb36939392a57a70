#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "errors.hpp"
#include "vec4.hpp"

namespace nullfront {

/**
 * Truncated jet of order N: value and derivatives 1..N with respect to the
 * curve parameter, stored as Taylor coefficients c[k] = f^(k)/k!.
 * Arithmetic follows the usual truncated power-series recurrences, so
 * composite expressions propagate exact derivatives (no finite differences).
 */
template <int N>
class Jet {
public:
    static_assert(N >= 1);

    Jet() = default;

    static Jet constant(double v) {
        Jet j;
        j.c_[0] = v;
        return j;
    }
    static Jet variable(double v) {
        Jet j;
        j.c_[0] = v;
        j.c_[1] = 1.0;
        return j;
    }

    double value() const { return c_[0]; }
    /// k-th derivative, k in [0, N].
    double deriv(int k) const { return c_[k] * factorial(k); }
    double coeff(int k) const { return c_[k]; }
    void set_coeff(int k, double v) { c_[k] = v; }

    bool all_finite() const {
        for (double v : c_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    /// Jet of the derivative function, one order lower.
    Jet<N - 1> derivative() const {
        Jet<N - 1> d;
        for (int k = 0; k <= N - 1; ++k) d.set_coeff(k, (k + 1) * c_[k + 1]);
        return d;
    }

    template <int M>
    Jet<M> truncate() const {
        static_assert(M <= N);
        Jet<M> t;
        for (int k = 0; k <= M; ++k) t.set_coeff(k, c_[k]);
        return t;
    }

    Jet operator-() const {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c_[k] = -c_[k];
        return r;
    }
    Jet operator+(const Jet& o) const {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c_[k] = c_[k] + o.c_[k];
        return r;
    }
    Jet operator-(const Jet& o) const {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c_[k] = c_[k] - o.c_[k];
        return r;
    }
    Jet operator*(const Jet& o) const {
        Jet r;
        for (int k = 0; k <= N; ++k) {
            double acc = 0.0;
            for (int j = 0; j <= k; ++j) acc += c_[j] * o.c_[k - j];
            r.c_[k] = acc;
        }
        return r;
    }
    Jet operator/(const Jet& o) const {
        if (std::fabs(o.c_[0]) <= kDivFloor) throw DomainError("division by zero");
        Jet r;
        for (int k = 0; k <= N; ++k) {
            double acc = c_[k];
            for (int j = 1; j <= k; ++j) acc -= o.c_[j] * r.c_[k - j];
            r.c_[k] = acc / o.c_[0];
        }
        return r;
    }
    Jet operator+(double v) const {
        Jet r = *this;
        r.c_[0] += v;
        return r;
    }
    Jet operator-(double v) const {
        Jet r = *this;
        r.c_[0] -= v;
        return r;
    }
    Jet operator*(double v) const {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c_[k] = c_[k] * v;
        return r;
    }

    static constexpr double kDivFloor = 1e-300;

private:
    static double factorial(int k) {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    }
    std::array<double, N + 1> c_{};
};

template <int N>
Jet<N> operator*(double v, const Jet<N>& j) {
    return j * v;
}
template <int N>
Jet<N> operator+(double v, const Jet<N>& j) {
    return j + v;
}
template <int N>
Jet<N> operator-(double v, const Jet<N>& j) {
    return (-j) + v;
}
template <int N>
Jet<N> operator/(double v, const Jet<N>& j) {
    return Jet<N>::constant(v) / j;
}

template <int N>
Jet<N> sqrt(const Jet<N>& a) {
    if (a.coeff(0) < 0.0) throw DomainError("sqrt of a negative value");
    if (a.coeff(0) <= Jet<N>::kDivFloor)
        throw DomainError("sqrt derivative is singular at zero");
    Jet<N> r;
    r.set_coeff(0, std::sqrt(a.coeff(0)));
    for (int k = 1; k <= N; ++k) {
        double acc = a.coeff(k);
        for (int j = 1; j <= k - 1; ++j) acc -= r.coeff(j) * r.coeff(k - j);
        r.set_coeff(k, acc / (2.0 * r.coeff(0)));
    }
    return r;
}

template <int N>
Jet<N> exp(const Jet<N>& a) {
    Jet<N> r;
    r.set_coeff(0, std::exp(a.coeff(0)));
    for (int k = 1; k <= N; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += j * a.coeff(j) * r.coeff(k - j);
        r.set_coeff(k, acc / k);
    }
    return r;
}

template <int N>
Jet<N> log(const Jet<N>& a) {
    if (a.coeff(0) <= 0.0) throw DomainError("log of a non-positive value");
    Jet<N> r;
    r.set_coeff(0, std::log(a.coeff(0)));
    for (int k = 1; k <= N; ++k) {
        double acc = k * a.coeff(k);
        for (int j = 1; j <= k - 1; ++j) acc -= j * r.coeff(j) * a.coeff(k - j);
        r.set_coeff(k, acc / (k * a.coeff(0)));
    }
    return r;
}

namespace detail {
// sin/cos (or sinh/cosh when hyper) share one recurrence pass.
template <int N>
void sincos(const Jet<N>& a, bool hyper, Jet<N>& s, Jet<N>& c) {
    s.set_coeff(0, hyper ? std::sinh(a.coeff(0)) : std::sin(a.coeff(0)));
    c.set_coeff(0, hyper ? std::cosh(a.coeff(0)) : std::cos(a.coeff(0)));
    const double sign = hyper ? 1.0 : -1.0;
    for (int k = 1; k <= N; ++k) {
        double as = 0.0, ac = 0.0;
        for (int j = 1; j <= k; ++j) {
            as += j * a.coeff(j) * c.coeff(k - j);
            ac += j * a.coeff(j) * s.coeff(k - j);
        }
        s.set_coeff(k, as / k);
        c.set_coeff(k, sign * ac / k);
    }
}
}  // namespace detail

template <int N>
Jet<N> sin(const Jet<N>& a) {
    Jet<N> s, c;
    detail::sincos(a, false, s, c);
    return s;
}
template <int N>
Jet<N> cos(const Jet<N>& a) {
    Jet<N> s, c;
    detail::sincos(a, false, s, c);
    return c;
}
template <int N>
Jet<N> tan(const Jet<N>& a) {
    Jet<N> s, c;
    detail::sincos(a, false, s, c);
    return s / c;
}
template <int N>
Jet<N> sinh(const Jet<N>& a) {
    Jet<N> s, c;
    detail::sincos(a, true, s, c);
    return s;
}
template <int N>
Jet<N> cosh(const Jet<N>& a) {
    Jet<N> s, c;
    detail::sincos(a, true, s, c);
    return c;
}

template <int N>
Jet<N> abs(const Jet<N>& a) {
    if (a.coeff(0) > 0.0) return a;
    if (a.coeff(0) < 0.0) return -a;
    throw DomainError("derivative of abs at zero");
}

/// Integer power by repeated squaring; valid for any base.
template <int N>
Jet<N> powi(const Jet<N>& a, long long e) {
    if (e < 0) return Jet<N>::constant(1.0) / powi(a, -e);
    Jet<N> r = Jet<N>::constant(1.0);
    Jet<N> base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// General power: integer exponents use repeated multiplication, anything
/// else evaluates exp(e*log(a)) and therefore needs a positive base.
template <int N>
Jet<N> pow(const Jet<N>& a, double e) {
    if (e == std::floor(e) && std::fabs(e) <= 1e9) return powi(a, static_cast<long long>(e));
    return exp(log(a) * e);
}

using Jet4 = Jet<4>;
using Jet3 = Jet<3>;
using Jet2 = Jet<2>;

using Vec4J4 = Vec4T<Jet4>;
using Vec4J3 = Vec4T<Jet3>;

template <int N>
Vec4 jet_values(const Vec4T<Jet<N>>& v) {
    return {{v[0].value(), v[1].value(), v[2].value(), v[3].value()}};
}

template <int N>
Vec4 jet_derivs(const Vec4T<Jet<N>>& v, int k) {
    return {{v[0].deriv(k), v[1].deriv(k), v[2].deriv(k), v[3].deriv(k)}};
}

template <int N>
Vec4T<Jet<N - 1>> vec_derivative(const Vec4T<Jet<N>>& v) {
    return {{v[0].derivative(), v[1].derivative(), v[2].derivative(), v[3].derivative()}};
}

template <int M, int N>
Vec4T<Jet<M>> vec_truncate(const Vec4T<Jet<N>>& v) {
    return {{v[0].template truncate<M>(), v[1].template truncate<M>(),
             v[2].template truncate<M>(), v[3].template truncate<M>()}};
}

template <int N>
Vec4T<Jet<N>> vec_constant(const Vec4& v) {
    return {{Jet<N>::constant(v[0]), Jet<N>::constant(v[1]), Jet<N>::constant(v[2]),
             Jet<N>::constant(v[3])}};
}

}  // namespace nullfront
