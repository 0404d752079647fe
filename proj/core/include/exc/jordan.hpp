#pragma once

// The exceptional Jordan algebra J of hermitian 3x3 octonion matrices,
//
//        ( xi1   x3   conj(x2) )
//    X = ( conj(x3)  xi2   x1  )      stored as (xi1, xi2, xi3, x1, x2, x3),
//        ( x2   conj(x1)  xi3  )
//
// with X o Y = (XY + YX)/2, the trace form (X, Y) = tr(X o Y) and the
// Freudenthal product X x Y. Over S = Cx<R> the same type is J^C and tau
// acts coefficientwise. Canonical coordinate order: (xi1, xi2, xi3,
// x1[0..7], x2[0..7], x3[0..7]); J^C stores 27 real then 27 imaginary.

#include <array>
#include <cstddef>
#include <vector>

#include "exc/octonion.hpp"
#include "exc/scalars.hpp"

namespace exc {

template <class S>
struct Jordan {
    std::array<S, 3> xi{};
    std::array<Oct<S>, 3> x{};

    Jordan() = default;

    static Jordan Ek(std::size_t k) {  // k = 1,2,3
        Jordan X;
        X.xi[k - 1] = S(1);
        return X;
    }
    static Jordan E() {
        Jordan X;
        X.xi = {S(1), S(1), S(1)};
        return X;
    }
    static Jordan F(std::size_t k, Oct<S> v) {  // k = 1,2,3
        Jordan X;
        X.x[k - 1] = std::move(v);
        return X;
    }
    static Jordan diag(S a, S b, S c) {
        Jordan X;
        X.xi = {std::move(a), std::move(b), std::move(c)};
        return X;
    }

    Jordan operator-() const {
        Jordan Y;
        for (std::size_t k = 0; k < 3; ++k) {
            Y.xi[k] = -xi[k];
            Y.x[k] = -x[k];
        }
        return Y;
    }
    Jordan& operator+=(const Jordan& o) {
        for (std::size_t k = 0; k < 3; ++k) {
            xi[k] += o.xi[k];
            x[k] += o.x[k];
        }
        return *this;
    }
    Jordan& operator-=(const Jordan& o) {
        for (std::size_t k = 0; k < 3; ++k) {
            xi[k] -= o.xi[k];
            x[k] -= o.x[k];
        }
        return *this;
    }
    friend Jordan operator+(Jordan a, const Jordan& b) { return a += b; }
    friend Jordan operator-(Jordan a, const Jordan& b) { return a -= b; }
    friend Jordan operator*(const S& s, Jordan a) {
        for (std::size_t k = 0; k < 3; ++k) {
            a.xi[k] *= s;
            a.x[k] = s * a.x[k];
        }
        return a;
    }
    friend bool operator==(const Jordan& a, const Jordan& b) {
        return a.xi == b.xi && a.x == b.x;
    }
};

template <class S>
bool is_zero(const Jordan<S>& X) {
    for (std::size_t k = 0; k < 3; ++k)
        if (!is_zero(X.xi[k]) || !is_zero(X.x[k])) return false;
    return true;
}

template <class S>
S trace(const Jordan<S>& X) {
    return X.xi[0] + X.xi[1] + X.xi[2];
}

// X o Y, written out per hermitian slot
template <class S>
Jordan<S> jmul(const Jordan<S>& X, const Jordan<S>& Y) {
    const S half = S(1) / S(2);
    Jordan<S> Z;
    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t k1 = (k + 1) % 3, k2 = (k + 2) % 3;
        Z.xi[k] = X.xi[k] * Y.xi[k] + inner(X.x[k1], Y.x[k1]) + inner(X.x[k2], Y.x[k2]);
        Oct<S> t = (X.xi[k1] + X.xi[k2]) * Y.x[k] + (Y.xi[k1] + Y.xi[k2]) * X.x[k] +
                   conj(Y.x[k1] * X.x[k2] + X.x[k1] * Y.x[k2]);
        Z.x[k] = half * t;
    }
    return Z;
}

// trace form (X, Y) = tr(X o Y); C-bilinear over Cx scalars
template <class S>
S inner(const Jordan<S>& X, const Jordan<S>& Y) {
    S s = X.xi[0] * Y.xi[0] + X.xi[1] * Y.xi[1] + X.xi[2] * Y.xi[2];
    S t = inner(X.x[0], Y.x[0]) + inner(X.x[1], Y.x[1]) + inner(X.x[2], Y.x[2]);
    return s + (S(2) * t);
}

// Freudenthal product
// X x Y = X o Y - (1/2) tr(X) Y - (1/2) tr(Y) X + (1/2)(tr(X)tr(Y) - (X,Y)) E
template <class S>
Jordan<S> cross(const Jordan<S>& X, const Jordan<S>& Y) {
    const S half = S(1) / S(2);
    S tX = trace(X), tY = trace(Y);
    Jordan<S> Z = jmul(X, Y);
    Z -= (half * tX) * Y;
    Z -= (half * tY) * X;
    S c = half * (tX * tY - inner(X, Y));
    Z.xi[0] += c;
    Z.xi[1] += c;
    Z.xi[2] += c;
    return Z;
}

// sigma: negates the x2 and x3 slots
template <class S>
Jordan<S> sigma_j(const Jordan<S>& X) {
    Jordan<S> Y = X;
    Y.x[1] = -Y.x[1];
    Y.x[2] = -Y.x[2];
    return Y;
}

// gamma applied to every octonion entry
template <class S>
Jordan<S> gamma_j(const Jordan<S>& X) {
    Jordan<S> Y = X;
    for (std::size_t k = 0; k < 3; ++k) Y.x[k] = gamma(Y.x[k]);
    return Y;
}

template <class R>
Jordan<Cx<R>> tau(const Jordan<Cx<R>>& X) {
    Jordan<Cx<R>> Y;
    for (std::size_t k = 0; k < 3; ++k) {
        Y.xi[k] = tau(X.xi[k]);
        Y.x[k] = tau(X.x[k]);
    }
    return Y;
}

template <class R>
Jordan<Cx<R>> complexify(const Jordan<R>& X) {
    Jordan<Cx<R>> Y;
    for (std::size_t k = 0; k < 3; ++k) {
        Y.xi[k] = Cx<R>(X.xi[k]);
        Y.x[k] = complexify(X.x[k]);
    }
    return Y;
}

template <class R>
Jordan<Cx<R>> imag_scale(const Jordan<R>& X) {  // i * X
    Jordan<Cx<R>> Y;
    for (std::size_t k = 0; k < 3; ++k) {
        Y.xi[k] = Cx<R>(R(0), X.xi[k]);
        for (std::size_t b = 0; b < 8; ++b) Y.x[k].coord(b) = Cx<R>(R(0), X.x[k].coord(b));
    }
    return Y;
}

inline Jordan<CF> to_cf(const Jordan<CRat>& X) {
    Jordan<CF> Y;
    for (std::size_t k = 0; k < 3; ++k) {
        Y.xi[k] = to_cf(X.xi[k]);
        Y.x[k] = to_cf(X.x[k]);
    }
    return Y;
}

// -------------------------------------------------- coordinates (27 / 54)

template <class R>
std::vector<R> coords(const Jordan<R>& X) {
    std::vector<R> v(27);
    for (std::size_t k = 0; k < 3; ++k) v[k] = X.xi[k];
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t b = 0; b < 8; ++b) v[3 + 8 * k + b] = X.x[k].coord(b);
    return v;
}

template <class R>
Jordan<R> jordan_from_coords(const std::vector<R>& v) {
    Jordan<R> X;
    for (std::size_t k = 0; k < 3; ++k) X.xi[k] = v[k];
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t b = 0; b < 8; ++b) X.x[k].coord(b) = v[3 + 8 * k + b];
    return X;
}

template <class R>
std::vector<R> coords(const Jordan<Cx<R>>& X) {
    std::vector<R> v(54);
    for (std::size_t k = 0; k < 3; ++k) {
        v[k] = X.xi[k].re;
        v[27 + k] = X.xi[k].im;
    }
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t b = 0; b < 8; ++b) {
            v[3 + 8 * k + b] = X.x[k].coord(b).re;
            v[27 + 3 + 8 * k + b] = X.x[k].coord(b).im;
        }
    return v;
}

template <class R>
Jordan<Cx<R>> jordan_c_from_coords(const std::vector<R>& v) {
    Jordan<Cx<R>> X;
    for (std::size_t k = 0; k < 3; ++k) X.xi[k] = Cx<R>(v[k], v[27 + k]);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t b = 0; b < 8; ++b)
            X.x[k].coord(b) = Cx<R>(v[3 + 8 * k + b], v[27 + 3 + 8 * k + b]);
    return X;
}

// basis element u_a, a = 0..26: E1, E2, E3, F1(e0..e7), F2(...), F3(...)
template <class S>
Jordan<S> jordan_basis(std::size_t a) {
    Jordan<S> X;
    if (a < 3)
        X.xi[a] = S(1);
    else
        X.x[(a - 3) / 8].coord((a - 3) % 8) = S(1);
    return X;
}

// ----------------------------------------------------------------- HSplit
// J = J(3, H) + H^3 via x_k = m_k + a_k e4 (real scalars only)

template <class R>
struct HSplit {
    std::array<R, 3> xi{};
    std::array<Quat<R>, 3> m{};
    std::array<Quat<R>, 3> a{};
};

template <class R>
HSplit<R> h_split(const Jordan<R>& X) {
    HSplit<R> s;
    s.xi = X.xi;
    for (std::size_t k = 0; k < 3; ++k) {
        s.m[k] = X.x[k].m;
        s.a[k] = X.x[k].a;
    }
    return s;
}

template <class R>
Jordan<R> h_join(const HSplit<R>& s) {
    Jordan<R> X;
    X.xi = s.xi;
    for (std::size_t k = 0; k < 3; ++k) X.x[k] = Oct<R>(s.m[k], s.a[k]);
    return X;
}

using JordanQ = Jordan<Rat>;
using JordanCQ = Jordan<CRat>;
using JordanCF = Jordan<CF>;

}  // namespace exc
