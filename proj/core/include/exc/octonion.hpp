#pragma once

// Quaternions H on {1,e1,e2,e3} and the Cayley algebra O = H + H e4 built by
// the Cayley-Dickson doubling
//   (m1 + a1 e4)(m2 + a2 e4) = (m1 m2 - conj(a2) a1) + (a2 m1 + a1 conj(m2)) e4.
// Basis order is 1, e1, e2, e3, e4, e5 = e1e4, e6 = e2e4, e7 = e3e4.
// The scalar S may be Rat, double, or a complexification Cx<R>; in the latter
// case the types represent H^C and O^C and tau acts coefficientwise.

#include <array>
#include <cstddef>

#include "exc/scalars.hpp"

namespace exc {

template <class S>
struct Quat {
    std::array<S, 4> c{};

    Quat() = default;
    explicit Quat(S r) { c[0] = std::move(r); }
    Quat(S c0, S c1, S c2, S c3) : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Quat basis(std::size_t k) {
        Quat q;
        q.c[k] = S(1);
        return q;
    }

    Quat operator-() const { return Quat(-c[0], -c[1], -c[2], -c[3]); }
    Quat& operator+=(const Quat& o) {
        for (std::size_t k = 0; k < 4; ++k) c[k] += o.c[k];
        return *this;
    }
    Quat& operator-=(const Quat& o) {
        for (std::size_t k = 0; k < 4; ++k) c[k] -= o.c[k];
        return *this;
    }
    friend Quat operator+(Quat a, const Quat& b) { return a += b; }
    friend Quat operator-(Quat a, const Quat& b) { return a -= b; }
    friend Quat operator*(const S& s, Quat a) {
        for (auto& x : a.c) x *= s;
        return a;
    }
    friend bool operator==(const Quat& a, const Quat& b) { return a.c == b.c; }

    // e1 e2 = e3, e2 e3 = e1, e3 e1 = e2
    friend Quat operator*(const Quat& a, const Quat& b) {
        return Quat(
            a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3],
            a.c[0] * b.c[1] + a.c[1] * b.c[0] + a.c[2] * b.c[3] - a.c[3] * b.c[2],
            a.c[0] * b.c[2] - a.c[1] * b.c[3] + a.c[2] * b.c[0] + a.c[3] * b.c[1],
            a.c[0] * b.c[3] + a.c[1] * b.c[2] - a.c[2] * b.c[1] + a.c[3] * b.c[0]);
    }
};

template <class S>
Quat<S> conj(const Quat<S>& q) {
    return Quat<S>(q.c[0], -q.c[1], -q.c[2], -q.c[3]);
}

template <class S>
S inner(const Quat<S>& a, const Quat<S>& b) {
    return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2] + a.c[3] * b.c[3];
}

template <class S>
S norm2(const Quat<S>& q) {
    return inner(q, q);
}

template <class R>
Quat<Cx<R>> tau(const Quat<Cx<R>>& q) {
    return Quat<Cx<R>>(tau(q.c[0]), tau(q.c[1]), tau(q.c[2]), tau(q.c[3]));
}

template <class S>
bool is_zero(const Quat<S>& q) {
    for (const auto& x : q.c)
        if (!is_zero(x)) return false;
    return true;
}

// ------------------------------------------------------------------ octonions

template <class S>
struct Oct {
    Quat<S> m, a;  // m + a e4

    Oct() = default;
    explicit Oct(S r) : m(std::move(r)) {}
    Oct(Quat<S> m_, Quat<S> a_) : m(std::move(m_)), a(std::move(a_)) {}

    static Oct basis(std::size_t k) {
        Oct x;
        if (k < 4)
            x.m.c[k] = S(1);
        else
            x.a.c[k - 4] = S(1);
        return x;
    }

    const S& coord(std::size_t k) const { return k < 4 ? m.c[k] : a.c[k - 4]; }
    S& coord(std::size_t k) { return k < 4 ? m.c[k] : a.c[k - 4]; }

    Oct operator-() const { return Oct(-m, -a); }
    Oct& operator+=(const Oct& o) {
        m += o.m;
        a += o.a;
        return *this;
    }
    Oct& operator-=(const Oct& o) {
        m -= o.m;
        a -= o.a;
        return *this;
    }
    friend Oct operator+(Oct x, const Oct& y) { return x += y; }
    friend Oct operator-(Oct x, const Oct& y) { return x -= y; }
    friend Oct operator*(const S& s, Oct x) {
        x.m = s * x.m;
        x.a = s * x.a;
        return x;
    }
    friend bool operator==(const Oct& x, const Oct& y) { return x.m == y.m && x.a == y.a; }

    friend Oct operator*(const Oct& x, const Oct& y) {
        return Oct(x.m * y.m - conj(y.a) * x.a, y.a * x.m + x.a * conj(y.m));
    }
};

template <class S>
Oct<S> conj(const Oct<S>& x) {
    return Oct<S>(conj(x.m), -x.a);
}

// gamma(m + a e4) = m - a e4; an order-2 algebra automorphism
template <class S>
Oct<S> gamma(const Oct<S>& x) {
    return Oct<S>(x.m, -x.a);
}

// bilinear form; on the real backends this is (x, y) = Re(x conj(y)), and the
// basis above is orthonormal for it
template <class S>
S inner(const Oct<S>& x, const Oct<S>& y) {
    return inner(x.m, y.m) + inner(x.a, y.a);
}

template <class S>
S norm2(const Oct<S>& x) {
    return inner(x, x);
}

template <class S>
S real_part(const Oct<S>& x) {
    return x.m.c[0];
}

template <class R>
Oct<Cx<R>> tau(const Oct<Cx<R>>& x) {
    return Oct<Cx<R>>(tau(x.m), tau(x.a));
}

template <class S>
bool is_zero(const Oct<S>& x) {
    return is_zero(x.m) && is_zero(x.a);
}

template <class R>
Oct<Cx<R>> complexify(const Oct<R>& x) {
    Oct<Cx<R>> z;
    for (std::size_t k = 0; k < 8; ++k) z.coord(k) = Cx<R>(x.coord(k));
    return z;
}

inline Oct<CF> to_cf(const Oct<CRat>& x) {
    Oct<CF> z;
    for (std::size_t k = 0; k < 8; ++k) z.coord(k) = to_cf(x.coord(k));
    return z;
}

using OctQ = Oct<Rat>;
using OctCQ = Oct<CRat>;
using QuatQ = Quat<Rat>;

}  // namespace exc
