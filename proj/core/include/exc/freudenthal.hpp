#pragma once

// The Freudenthal C-vector space P^C = J^C + J^C + C + C (112 real
// coordinates: X 54, Y 54, xi 2, eta 2), its distinguished points, the
// Hermitian and skew forms, the lambda map, and the V^6/V^7/V^8 subspaces
// with their closed-form mu-norms and seeded sphere samplers.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "exc/jordan.hpp"
#include "exc/rng.hpp"
#include "exc/scalars.hpp"

namespace exc {

template <class CS>
struct FVec {
    Jordan<CS> X, Y;
    CS xi{}, eta{};

    FVec() = default;
    FVec(Jordan<CS> x, Jordan<CS> y, CS xi_, CS eta_)
        : X(std::move(x)), Y(std::move(y)), xi(std::move(xi_)), eta(std::move(eta_)) {}

    FVec operator-() const { return FVec(-X, -Y, -xi, -eta); }
    FVec& operator+=(const FVec& o) {
        X += o.X;
        Y += o.Y;
        xi += o.xi;
        eta += o.eta;
        return *this;
    }
    FVec& operator-=(const FVec& o) {
        X -= o.X;
        Y -= o.Y;
        xi -= o.xi;
        eta -= o.eta;
        return *this;
    }
    friend FVec operator+(FVec a, const FVec& b) { return a += b; }
    friend FVec operator-(FVec a, const FVec& b) { return a -= b; }
    friend FVec operator*(const CS& s, FVec p) {
        p.X = s * p.X;
        p.Y = s * p.Y;
        p.xi *= s;
        p.eta *= s;
        return p;
    }
    friend bool operator==(const FVec& a, const FVec& b) {
        return a.X == b.X && a.Y == b.Y && a.xi == b.xi && a.eta == b.eta;
    }
};

using FVecQ = FVec<CRat>;
using FVecF = FVec<CF>;

// ------------------------------------------------------ distinguished points

template <class CS>
FVec<CS> fdot1(const Oct<CS>& h) {  // (F1(h), 0, 0, 0)
    return FVec<CS>(Jordan<CS>::F(1, h), Jordan<CS>(), CS(0), CS(0));
}
template <class CS>
FVec<CS> e1_tilde() {  // (0, E1, 0, 1)
    return FVec<CS>(Jordan<CS>(), Jordan<CS>::Ek(1), CS(0), CS(1));
}
template <class CS>
FVec<CS> em1_tilde() {  // (0, E1, 0, -1)
    return FVec<CS>(Jordan<CS>(), Jordan<CS>::Ek(1), CS(0), CS(-1));
}
template <class CS>
FVec<CS> edot23() {  // (E2 + E3, 0, 0, 0)
    return FVec<CS>(Jordan<CS>::Ek(2) + Jordan<CS>::Ek(3), Jordan<CS>(), CS(0), CS(0));
}

// ----------------------------------------------------------------- the forms

// <P, Q> = (tau X, Z) + (tau Y, W) + (tau xi) zeta + (tau eta) omega
template <class CS>
CS herm_inner(const FVec<CS>& p, const FVec<CS>& q) {
    return inner(tau(p.X), q.X) + inner(tau(p.Y), q.Y) + tau(p.xi) * q.xi + tau(p.eta) * q.eta;
}

// {P, Q} = (X, W) - (Z, Y) + xi omega - zeta eta
template <class CS>
CS skew_form(const FVec<CS>& p, const FVec<CS>& q) {
    return inner(p.X, q.Y) - inner(q.X, p.Y) + p.xi * q.eta - q.xi * p.eta;
}

// lambda(X, Y, xi, eta) = (Y, -X, eta, -xi); lambda^2 = -id
template <class CS>
FVec<CS> lambda_map(const FVec<CS>& p) {
    return FVec<CS>(p.Y, -p.X, p.eta, -p.xi);
}

template <class CS>
FVec<CS> sigma_p(const FVec<CS>& p) {
    return FVec<CS>(sigma_j(p.X), sigma_j(p.Y), p.xi, p.eta);
}
template <class CS>
FVec<CS> gamma_p(const FVec<CS>& p) {
    return FVec<CS>(gamma_j(p.X), gamma_j(p.Y), p.xi, p.eta);
}
template <class R>
FVec<Cx<R>> tau(const FVec<Cx<R>>& p) {
    return FVec<Cx<R>>(tau(p.X), tau(p.Y), tau(p.xi), tau(p.eta));
}

// ------------------------------------------------------------- coordinates

template <class R>
std::vector<R> coords(const FVec<Cx<R>>& p) {
    std::vector<R> v;
    v.reserve(112);
    std::vector<R> cx = coords(p.X), cy = coords(p.Y);
    v.insert(v.end(), cx.begin(), cx.end());
    v.insert(v.end(), cy.begin(), cy.end());
    v.push_back(p.xi.re);
    v.push_back(p.xi.im);
    v.push_back(p.eta.re);
    v.push_back(p.eta.im);
    return v;
}

template <class R>
FVec<Cx<R>> fvec_from_coords(const std::vector<R>& v) {
    FVec<Cx<R>> p;
    std::vector<R> cx(v.begin(), v.begin() + 54), cy(v.begin() + 54, v.begin() + 108);
    p.X = jordan_c_from_coords(cx);
    p.Y = jordan_c_from_coords(cy);
    p.xi = Cx<R>(v[108], v[109]);
    p.eta = Cx<R>(v[110], v[111]);
    return p;
}

inline FVecF to_cf(const FVecQ& p) {
    return FVecF(to_cf(p.X), to_cf(p.Y), to_cf(p.xi), to_cf(p.eta));
}

// ------------------------------------------------------------------ V-spaces

enum class VTag { V6, V7, V8 };

inline const char* vtag_name(VTag t) {
    switch (t) {
        case VTag::V6: return "V6";
        case VTag::V7: return "V7";
        default: return "V8";
    }
}

// Tagged parametrization of the displayed V-space points
//   V6: ((0 | xi, h | conj h, -tau xi), 0, 0, 0),              xi in C, h in H
//   V7: same X, Y = i eta E1, eta-coordinate = -i eta,         eta in R
//   V8: same X, Y = eta E1, eta-coordinate = tau eta,          eta in C
struct VPoint {
    VTag tag = VTag::V6;
    CF xi{};
    Quat<double> h{};
    CF eta{};  // V7 uses the real part only

    void validate() const {
        if (tag == VTag::V6 && (eta.re != 0.0 || eta.im != 0.0))
            throw std::invalid_argument("VPoint: V6 point carries an eta coordinate");
        if (tag == VTag::V7 && eta.im != 0.0)
            throw std::invalid_argument("VPoint: V7 eta must be real");
    }
};

// (P, P)_mu closed forms: (tau xi) xi + conj(h) h [+ eta^2 | + (tau eta) eta]
inline double mu_norm(const VPoint& p) {
    p.validate();
    double n = abs2(p.xi) + norm2(p.h);
    if (p.tag == VTag::V7) n += p.eta.re * p.eta.re;
    if (p.tag == VTag::V8) n += abs2(p.eta);
    return n;
}

FVecF embed(const VPoint& p);

// inverse of embed; verifies the embedded shape within tol
VPoint extract_vpoint(const FVecF& p, VTag tag, double tol);

// seeded unit-mu-norm sample
VPoint sample_sphere(VTag tag, Rng& rng);

// exact basis of the embedded subspace (for the dimension oracle)
std::vector<FVecQ> vspace_basis_exact(VTag tag);

}  // namespace exc
