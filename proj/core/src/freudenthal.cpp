#include "exc/freudenthal.hpp"

#include <cmath>

namespace exc {

FVecF embed(const VPoint& p) {
    p.validate();
    FVecF out;
    Oct<CF> h = [&] {
        Oct<CF> z;
        for (std::size_t k = 0; k < 4; ++k) z.coord(k) = CF(p.h.c[k]);
        return z;
    }();
    out.X.xi[1] = p.xi;
    out.X.xi[2] = CF(-1.0) * tau(p.xi);
    out.X.x[0] = h;
    switch (p.tag) {
        case VTag::V6: break;
        case VTag::V7:
            out.Y.xi[0] = CF(0.0, p.eta.re);
            out.eta = CF(0.0, -p.eta.re);
            break;
        case VTag::V8:
            out.Y.xi[0] = p.eta;
            out.eta = tau(p.eta);
            break;
    }
    return out;
}

VPoint extract_vpoint(const FVecF& p, VTag tag, double tol) {
    VPoint out;
    out.tag = tag;
    out.xi = p.X.xi[1];
    for (std::size_t k = 0; k < 4; ++k) out.h.c[k] = p.X.x[0].coord(k).re;

    double err = 0.0;
    auto bump = [&](double v) { err = std::max(err, std::fabs(v)); };
    // X must have the displayed V-shape
    bump(cabs(p.X.xi[0]));
    bump(cabs(p.X.xi[2] + tau(out.xi)));
    for (std::size_t k = 1; k < 3; ++k)
        for (std::size_t c = 0; c < 8; ++c) bump(cabs(p.X.x[k].coord(c)));
    for (std::size_t c = 0; c < 8; ++c) bump(std::fabs(p.X.x[0].coord(c).im));
    for (std::size_t c = 4; c < 8; ++c) bump(std::fabs(p.X.x[0].coord(c).re));
    bump(cabs(p.xi));
    // Y carries only the eta1 slot
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t c = 0; c < 8; ++c) bump(cabs(p.Y.x[k].coord(c)));
    bump(cabs(p.Y.xi[1]));
    bump(cabs(p.Y.xi[2]));

    switch (tag) {
        case VTag::V6:
            bump(cabs(p.Y.xi[0]));
            bump(cabs(p.eta));
            break;
        case VTag::V7:
            bump(std::fabs(p.Y.xi[0].re));
            out.eta = CF(p.Y.xi[0].im);
            bump(cabs(p.eta - CF(0.0, -out.eta.re)));
            break;
        case VTag::V8:
            out.eta = p.Y.xi[0];
            bump(cabs(p.eta - tau(out.eta)));
            break;
    }
    if (err > tol) throw std::invalid_argument("extract_vpoint: embedded shape violated");
    return out;
}

VPoint sample_sphere(VTag tag, Rng& rng) {
    VPoint p;
    p.tag = tag;
    p.xi = CF(rng.gaussian(), rng.gaussian());
    for (std::size_t k = 0; k < 4; ++k) p.h.c[k] = rng.gaussian();
    if (tag == VTag::V7) p.eta = CF(rng.gaussian());
    if (tag == VTag::V8) p.eta = CF(rng.gaussian(), rng.gaussian());
    double s = 1.0 / std::sqrt(mu_norm(p));
    p.xi = CF(s) * p.xi;
    p.h = s * p.h;
    p.eta = CF(s) * p.eta;
    return p;
}

std::vector<FVecQ> vspace_basis_exact(VTag tag) {
    std::vector<FVecQ> out;
    auto push = [&](const CRat& xi, const Oct<Rat>& h, const CRat& eta) {
        FVecQ p;
        p.X.xi[1] = xi;
        p.X.xi[2] = -tau(xi);
        p.X.x[0] = complexify(h);
        if (tag == VTag::V7) {
            p.Y.xi[0] = eta;  // caller passes i*eta directly
            p.eta = -eta;
        } else if (tag == VTag::V8) {
            p.Y.xi[0] = eta;
            p.eta = tau(eta);
        }
        out.push_back(std::move(p));
    };
    const CRat one(Rat(1)), i = CRat::i(), zero;
    push(one, {}, zero);
    push(i, {}, zero);
    for (std::size_t b = 0; b < 4; ++b) {
        Oct<Rat> h;
        h.coord(b) = 1;
        push(zero, h, zero);
    }
    if (tag == VTag::V7) push(zero, {}, i);  // eta real 1 embeds as i eta
    if (tag == VTag::V8) {
        push(zero, {}, one);
        push(zero, {}, i);
    }
    return out;
}

}  // namespace exc
