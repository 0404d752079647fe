#pragma once

// Scalar backends: exact rationals (GMP) and double. The complexification
// wrapper Cx<R> carries the unit i of V^C strictly separately from the
// imaginary octonion units e1..e7; tau is the conjugation u + iv -> u - iv.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace exc {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rat& x) { return x.get_d(); }
inline constexpr double to_double(double x) { return x; }

template <class R>
inline constexpr bool is_exact_v = std::is_same_v<R, Rat>;

template <class R>
const char* backend_name() {
    return is_exact_v<R> ? "exact" : "float";
}

template <class R>
bool is_zero(const R& x) {
    if constexpr (is_exact_v<R>)
        return sgn(x) == 0;
    else
        return x == 0.0;
}

// ------------------------------------------------------------------ Cx<R>

template <class R>
struct Cx {
    R re{}, im{};

    Cx() = default;
    Cx(R r) : re(std::move(r)) {}  // NOLINT: implicit real -> complex
    Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    static Cx i() { return Cx(R(0), R(1)); }

    Cx operator-() const { return Cx(-re, -im); }

    Cx& operator+=(const Cx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cx& operator-=(const Cx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Cx& operator*=(const Cx& o) {
        R r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend Cx operator+(Cx a, const Cx& b) { return a += b; }
    friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
    friend Cx operator*(Cx a, const Cx& b) { return a *= b; }
    friend Cx operator*(const R& s, Cx a) {
        a.re *= s;
        a.im *= s;
        return a;
    }
    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }

    friend Cx operator/(const Cx& a, const Cx& b) {
        R n = b.re * b.re + b.im * b.im;
        if (is_zero(n)) throw std::domain_error("Cx: division by zero");
        return Cx((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
};

using CRat = Cx<Rat>;
using CF = Cx<double>;

template <class R>
Cx<R> tau(const Cx<R>& z) {
    return Cx<R>(z.re, -z.im);
}
inline Rat tau(const Rat& x) { return x; }
inline double tau(double x) { return x; }

template <class R>
bool is_zero(const Cx<R>& z) {
    return is_zero(z.re) && is_zero(z.im);
}

template <class R>
CF to_cf(const Cx<R>& z) {
    return CF(to_double(z.re), to_double(z.im));
}

inline double abs2(double x) { return x * x; }
inline Rat abs2(const Rat& x) { return x * x; }
template <class R>
R abs2(const Cx<R>& z) {
    return z.re * z.re + z.im * z.im;
}

inline double cabs(const CF& z) { return std::hypot(z.re, z.im); }
inline double carg(const CF& z) { return std::atan2(z.im, z.re); }
inline CF cx_polar(double r, double theta) { return CF(r * std::cos(theta), r * std::sin(theta)); }
inline CF cx_exp_i(double theta) { return CF(std::cos(theta), std::sin(theta)); }

// Every float comparison goes through an explicit tolerance.
inline bool approx_zero(double x, double tol) { return std::fabs(x) <= tol; }
inline bool approx_eq(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
inline bool approx_eq(const CF& a, const CF& b, double tol) {
    return approx_eq(a.re, b.re, tol) && approx_eq(a.im, b.im, tol);
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

}  // namespace exc
