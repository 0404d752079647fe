#include "exc/orbits.hpp"

#include <cmath>
#include <stdexcept>

#include "exc/groups.hpp"

namespace exc {

namespace {

constexpr double kBranchTol = 1e-12;

void check_norm(const VPoint& p, double tol) {
    if (std::fabs(mu_norm(p) - 1.0) > tol)
        throw std::invalid_argument("canonicalize: point is not on the unit sphere");
}

void push_step(std::vector<WordStep>& word, FVecF& cur, std::string gen,
               std::vector<double> params, MatD op) {
    cur = apply_op(op, cur);
    word.push_back(WordStep{std::move(gen), std::move(params), std::move(op)});
}

// the S^5 reduction steps applied to cur (which must be V6-shaped)
void s5_steps(std::vector<WordStep>& word, FVecF& cur) {
    if (point_distance(cur, s5_target()) <= kBranchTol) return;  // already canonical
    // step 1: rotate xi onto the real axis
    CF xi = cur.X.xi[1];
    if (cabs(xi) > kBranchTol) {
        double t = -carg(xi);
        if (std::fabs(t) > 0.0)
            push_step(word, cur, "alpha23_tilde", {t}, alpha23_tilde(t));
    }
    // step 2: if h != 0, fold it into the xi coordinate
    Quat<double> h;
    for (std::size_t c = 0; c < 4; ++c) h.c[c] = cur.X.x[0].coord(c).re;
    double hn = std::sqrt(norm2(h));
    if (hn > kBranchTol) {
        Quat<double> a = (M_PI / (2.0 * hn)) * h;
        push_step(word, cur, "alpha1_tilde", {a.c[0], a.c[1], a.c[2], a.c[3]},
                  alpha1_tilde(a));
    }
    // step 3: xi' = e^{i theta}; rotate to 1
    CF xip = cur.X.xi[1];
    if (std::fabs(cabs(xip) - 1.0) > 1e-9)
        throw std::runtime_error("canonicalize_s5: |xi'| != 1 after reduction");
    double theta = carg(xip);
    if (std::fabs(theta) > 0.0)
        push_step(word, cur, "alpha23_tilde", {-theta}, alpha23_tilde(-theta));
    // step 4: (E2 - E3, 0, 0, 0) -> i Edot23
    push_step(word, cur, "alpha23_tilde", {M_PI / 2}, alpha23_tilde(M_PI / 2));
}

// the S^6 steps: kill the eta term, then S^5, then alpha23(-pi/4)
void s6_steps(std::vector<WordStep>& word, FVecF& cur) {
    if (point_distance(cur, s6_target()) <= kBranchTol) return;  // already canonical
    CF xi = cur.X.xi[1];
    CF eta_term = cur.Y.xi[0];  // i eta with eta real
    CF tx_minus_x = tau(xi) - xi;
    double a;
    if (cabs(tx_minus_x) <= kBranchTol) {
        a = M_PI / 4;
        if (cabs(eta_term) <= kBranchTol) a = 0.0;
    } else {
        // tan 2a = i 2 eta / (tau xi - xi), and eta_term = i eta
        CF ratio = (CF(2.0) * eta_term) / tx_minus_x;
        if (std::fabs(ratio.im) > 1e-12)
            throw std::runtime_error("canonicalize_s6: tan 2a is not real");
        a = 0.5 * std::atan(ratio.re);
        if (a < 0) a += M_PI / 2;  // proof picks a in [0, pi/2)
    }
    if (a != 0.0)
        push_step(word, cur, "alpha23", {a}, alpha_k(2, a) * alpha_k(3, a));
    s5_steps(word, cur);
    push_step(word, cur, "alpha23", {-M_PI / 4},
              alpha_k(2, -M_PI / 4) * alpha_k(3, -M_PI / 4));
}

}  // namespace

FVecF s5_target() {
    FVecF t;
    t.X.xi[1] = CF(0.0, 1.0);
    t.X.xi[2] = CF(0.0, 1.0);
    return t;
}

FVecF s6_target() {
    FVecF t;
    t.Y.xi[0] = CF(0.0, -1.0);
    t.eta = CF(0.0, 1.0);
    return t;
}

FVecF s7_target() {
    FVecF t;
    t.Y.xi[0] = CF(1.0);
    t.eta = CF(1.0);
    return t;
}

double point_distance(const FVecF& a, const FVecF& b) {
    std::vector<double> va = coords(a), vb = coords(b);
    double d = 0.0;
    for (std::size_t k = 0; k < va.size(); ++k) d = std::max(d, std::fabs(va[k] - vb[k]));
    return d;
}

CanonResult canonicalize_s5(const VPoint& p, double tol) {
    if (p.tag != VTag::V6) throw std::invalid_argument("canonicalize_s5: expected a V6 point");
    check_norm(p, tol);
    CanonResult res;
    FVecF cur = embed(p);
    s5_steps(res.word, cur);
    res.final_point = cur;
    res.residual = point_distance(cur, s5_target());
    return res;
}

CanonResult canonicalize_s6(const VPoint& p, double tol) {
    if (p.tag != VTag::V7) throw std::invalid_argument("canonicalize_s6: expected a V7 point");
    check_norm(p, tol);
    CanonResult res;
    FVecF cur = embed(p);
    s6_steps(res.word, cur);
    res.final_point = cur;
    res.residual = point_distance(cur, s6_target());
    return res;
}

CanonResult canonicalize_s7(const VPoint& p, double tol) {
    if (p.tag != VTag::V8) throw std::invalid_argument("canonicalize_s7: expected a V8 point");
    check_norm(p, tol);
    CanonResult res;
    FVecF cur = embed(p);

    // step 1: rotate eta into i R; t is reduced mod pi/2 into (-pi/4, pi/4]
    // (shifting t by pi/2 only flips the sign of e^{-2it} eta)
    CF eta = cur.Y.xi[0];
    if (cabs(eta) > kBranchTol) {
        double t = 0.5 * (carg(eta) - M_PI / 2);
        t -= (M_PI / 2) * std::round(t / (M_PI / 2));
        if (t <= -M_PI / 4) t += M_PI / 2;
        if (std::fabs(t) > kBranchTol)
            push_step(res.word, cur, "alpha_diag", {t}, alpha_diag(t));
    }
    s6_steps(res.word, cur);
    push_step(res.word, cur, "alpha_diag", {-M_PI / 4}, alpha_diag(-M_PI / 4));

    res.final_point = cur;
    res.residual = point_distance(cur, s7_target());
    return res;
}

}  // namespace exc
