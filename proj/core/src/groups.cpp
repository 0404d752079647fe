#include "exc/groups.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace exc {

// ------------------------------------------------------------- utilities

FVecF apply_op(const MatD& m, const FVecF& p) { return fvec_from_coords(m.apply(coords(p))); }

MatD j_mult_op112() {
    return mat_from_action<double>(112, [](std::size_t j) {
        std::vector<double> v(112, 0.0);
        v[j] = 1.0;
        FVecF p = fvec_from_coords(v);
        CF i = CF::i();
        return coords(FVecF(i * p.X, i * p.Y, i * p.xi, i * p.eta));
    });
}

Oct<CF> oct_cf(const Quat<double>& q) {
    Oct<CF> z;
    for (std::size_t k = 0; k < 4; ++k) z.coord(k) = CF(q.c[k]);
    return z;
}

double max_abs(const QMatF& m) {
    double v = 0.0;
    for (const auto& q : m.a)
        for (double c : q.c) v = std::max(v, std::fabs(c));
    return v;
}

bool qmat_is_zero(const QMatQ& m) {
    for (const auto& q : m.a)
        if (!is_zero(q)) return false;
    return true;
}

namespace {

JordanCF random_jordan_cf(Rng& rng) {
    std::vector<double> v(54);
    for (auto& x : v) x = rng.gaussian();
    return jordan_c_from_coords(v);
}

FVecF random_fvec(Rng& rng) {
    std::vector<double> v(112);
    for (auto& x : v) x = rng.gaussian();
    return fvec_from_coords(v);
}

template <class R>
Mat<Cx<R>> cmat_tau(Mat<Cx<R>> m) {
    for (auto& z : m.data()) z = tau(z);
    return m;
}

template <class R>
Cx<R> det_c(Mat<Cx<R>> m) {
    const std::size_t n = m.rows();
    Cx<R> det(R(1));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (!is_zero(m(i, c))) {
                piv = i;
                break;
            }
        if (piv == n) return Cx<R>(R(0));
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            Cx<R> f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

}  // namespace

// ------------------------------------------------------------ calibration

namespace {

// the three closed-form anchors evaluated under a candidate y_sign
double anchor_residual(int y_sign) {
    double worst = 0.0;

    // alpha~1(a) = exp(i F~1(a)) on J^C
    Quat<double> a(0.37, -0.21, 0.52, 0.11);
    JordanCF f1a = JordanCF::F(1, CF::i() * oct_cf(a));
    worst = std::max(worst, rel_residual(matrix_exp(mult_op54f(f1a)), alpha1_tilde54(a)));

    // alpha_2(0.7) = exp Phi(0, a E2, -a E2, 0) on P^C
    {
        double t = 0.7;
        JordanCF a2 = CF(t) * JordanCF::Ek(2);
        MatD phi(54, 54), tphi(54, 54);
        MatD e = realize_phi_f(phi, tphi, a2, CF(-1.0) * a2, CF(0.0), y_sign);
        worst = std::max(worst, rel_residual(matrix_exp(e), alpha_k(2, t)));
    }

    // alpha(t) = exp Phi(2it E1 v E1, 0, 0, -2it) on P^C
    {
        double t = 0.3;
        JordanQ tr = JordanQ::Ek(1) + JordanQ::Ek(1) - JordanQ::Ek(2) - JordanQ::Ek(3);
        JordanCF tc = CF(0.0, 2.0 * t / 3.0) * to_cf(complexify(tr));
        MatD phi = mult_op54f(tc);
        MatD e = realize_phi_f(phi, phi, JordanCF(), JordanCF(), CF(0.0, -2.0 * t), y_sign);
        worst = std::max(worst, rel_residual(matrix_exp(e), alpha_diag(t)));
    }
    return worst;
}

}  // namespace

int phi_y_sign() {
    static const int sign = [] {
        double rm = anchor_residual(-1);
        double rp = anchor_residual(+1);
        return rm <= rp ? -1 : +1;
    }();
    return sign;
}

const Calibration& calibration() {
    static const Calibration cal = [] {
        Calibration c;
        c.y_sign = phi_y_sign();
        c.max_anchor_residual = anchor_residual(c.y_sign);
        c.anchors_pass = c.max_anchor_residual <= 1e-9;

        Rng rng(0x5eedf00dull);
        c.lambda_in_e7 = is_e7(to_float(lambda_op()), 1e-9, 5, rng);
        c.kj_sigma_ok =
            phi6_exact(Quat<Rat>(Rat(-1)), i2_matrix()) == sigma_op(Basis::JC54).mat;
        return c;
    }();
    return cal;
}

std::string Calibration::summary() const {
    std::ostringstream os;
    os << "phi_y_sign=" << y_sign << " anchors=" << (anchors_pass ? "ok" : "FAIL")
       << " max_anchor_residual=" << max_anchor_residual
       << " lambda=(Y,-X,eta,-xi):" << (lambda_in_e7 ? "in_E7" : "FAIL")
       << " kJ=interleaved:" << (kj_sigma_ok ? "ok" : "FAIL");
    return os.str();
}

// ------------------------------------------------------------- memberships

double f4_residual(const MatD& t) {
    double scale = std::max(1.0, inf_norm(t));
    double worst = 0.0;
    for (std::size_t a = 0; a < 27; ++a) {
        std::vector<double> va(27, 0.0);
        va[a] = 1.0;
        std::vector<double> ta = t.apply(va);
        Jordan<double> ja = jordan_from_coords(ta);
        for (std::size_t b = a; b < 27; ++b) {
            std::vector<double> vb(27, 0.0);
            vb[b] = 1.0;
            Jordan<double> jb = jordan_from_coords(t.apply(vb));
            std::vector<double> lhs =
                t.apply(coords(jmul(jordan_basis<double>(a), jordan_basis<double>(b))));
            std::vector<double> rhs = coords(jmul(ja, jb));
            for (std::size_t c = 0; c < 27; ++c)
                worst = std::max(worst, std::fabs(lhs[c] - rhs[c]));
        }
    }
    return worst / std::max(1.0, scale * scale);
}

bool is_f4(const MatD& t, double tol) { return f4_residual(t) <= tol; }

bool is_f4_exact(const MatQ& t) {
    for (std::size_t a = 0; a < 27; ++a) {
        JordanQ ja = jordan_from_coords(t.apply(coords(jordan_basis<Rat>(a))));
        for (std::size_t b = a; b < 27; ++b) {
            JordanQ jb = jordan_from_coords(t.apply(coords(jordan_basis<Rat>(b))));
            std::vector<Rat> lhs =
                t.apply(coords(jmul(jordan_basis<Rat>(a), jordan_basis<Rat>(b))));
            if (!(jordan_from_coords(lhs) == jmul(ja, jb))) return false;
        }
    }
    return true;
}

namespace {

std::vector<double> tau54(std::vector<double> v) {
    for (std::size_t k = 27; k < 54; ++k) v[k] = -v[k];
    return v;
}

}  // namespace

double e6_residual(const MatD& t, std::size_t n_samples, Rng& rng) {
    double scale = std::max(1.0, inf_norm(t));
    double worst = 0.0;
    for (std::size_t s = 0; s < n_samples; ++s) {
        JordanCF x = random_jordan_cf(rng), y = random_jordan_cf(rng);
        // tau alpha tau (X x Y) vs alpha X x alpha Y
        std::vector<double> lhs = tau54(t.apply(tau54(coords(cross(x, y)))));
        JordanCF tx = jordan_c_from_coords(t.apply(coords(x)));
        JordanCF ty = jordan_c_from_coords(t.apply(coords(y)));
        std::vector<double> rhs = coords(cross(tx, ty));
        double norm = 0.0;
        for (std::size_t k = 0; k < 54; ++k) {
            worst = std::max(worst, std::fabs(lhs[k] - rhs[k]) / (scale * scale));
            norm = std::max(norm, std::fabs(rhs[k]));
        }
        // Hermitian inner product preservation
        CF hi = inner(tau(tx), ty) - inner(tau(x), y);
        worst = std::max(worst, cabs(hi) / (scale * scale));
    }
    return worst;
}

bool is_e6(const MatD& t, double tol, std::size_t n_samples, Rng& rng) {
    return e6_residual(t, n_samples, rng) <= tol;
}

MatD cross_op(const FVecF& p, const FVecF& q) {
    const JordanCF &X = p.X, &Y = p.Y, &Z = q.X, &W = q.Y;
    const CF &xi = p.xi, &eta = p.eta, &zeta = q.xi, &omega = q.eta;

    MatD phi = vee(X, W) + vee(Z, Y);
    MatD tphi = vee(W, X) + vee(Y, Z);
    for (auto& v : phi.data()) v *= -0.5;
    for (auto& v : tphi.data()) v *= -0.5;

    JordanCF a = CF(2.0) * cross(Y, W) - xi * Z - zeta * X;
    a = CF(-0.25) * a;
    JordanCF b = CF(2.0) * cross(X, Z) - eta * W - omega * Y;
    b = CF(0.25) * b;
    CF nu = CF(0.125) * (inner(X, W) + inner(Z, Y) - CF(3.0) * (xi * omega + zeta * eta));
    return realize_phi_f(phi, tphi, a, b, nu, phi_y_sign());
}

double e7_residual(const MatD& t, std::size_t n_samples, Rng& rng) {
    double scale = std::max(1.0, inf_norm(t));
    MatD tinv = inverse(t);
    double worst = 0.0;
    for (std::size_t s = 0; s < n_samples; ++s) {
        FVecF p = random_fvec(rng), q = random_fvec(rng);
        MatD lhs = t * cross_op(p, q) * tinv;
        FVecF tp = apply_op(t, p), tq = apply_op(t, q);
        MatD rhs = cross_op(tp, tq);
        double denom = std::max(1.0, inf_norm(rhs));
        worst = std::max(worst, inf_norm(lhs - rhs) / denom);
        CF hi = herm_inner(tp, tq) - herm_inner(p, q);
        worst = std::max(worst, cabs(hi) / (scale * scale));
    }
    return worst;
}

bool is_e7(const MatD& t, double tol, std::size_t n_samples, Rng& rng) {
    return e7_residual(t, n_samples, rng) <= tol;
}

MatQ lambda_op() {
    return mat_from_action<Rat>(112, [](std::size_t j) {
        std::vector<Rat> v(112, Rat(0));
        v[j] = 1;
        return coords(lambda_map(fvec_from_coords(v)));
    });
}

// ------------------------------------------------------- F4 homomorphisms

namespace {

template <class S>
QMat<S> hermitian_qmat(const HSplit<S>& s) {
    QMat<S> m(3);
    m(0, 0) = Quat<S>(s.xi[0]);
    m(1, 1) = Quat<S>(s.xi[1]);
    m(2, 2) = Quat<S>(s.xi[2]);
    m(1, 2) = s.m[0];
    m(2, 1) = conj(s.m[0]);
    m(2, 0) = s.m[1];
    m(0, 2) = conj(s.m[1]);
    m(0, 1) = s.m[2];
    m(1, 0) = conj(s.m[2]);
    return m;
}

// phi(p, A) X = A M A* + p a A* through the H-split
template <class S>
Jordan<S> phi_f4_apply(const Quat<S>& p, const QMat<S>& a_mat, const Jordan<S>& x) {
    HSplit<S> s = h_split(x);
    QMat<S> m = hermitian_qmat(s);
    QMat<S> astar = a_mat.conj_transpose();
    QMat<S> mp = a_mat * m * astar;
    HSplit<S> out;
    out.xi = {mp(0, 0).c[0], mp(1, 1).c[0], mp(2, 2).c[0]};
    out.m = {mp(1, 2), mp(2, 0), mp(0, 1)};
    for (std::size_t j = 0; j < 3; ++j) {
        Quat<S> acc{};
        for (std::size_t k = 0; k < 3; ++k) acc += s.a[k] * astar(k, j);
        out.a[j] = p * acc;
    }
    return h_join(out);
}

}  // namespace

MatD phi_f4_gamma(const Quat<double>& p, const QMatF& a, double tol) {
    if (std::fabs(norm2(p) - 1.0) > tol)
        throw std::invalid_argument("phi_f4_gamma: p is not a unit quaternion");
    QMatF gram = a.conj_transpose() * a;
    QMatF id = QMatF::identity(a.n);
    if (max_abs(gram - id) > tol)
        throw std::invalid_argument("phi_f4_gamma: A is not symplectic-unitary");
    return mat_from_action<double>(27, [&](std::size_t j) {
        return coords(phi_f4_apply(p, a, jordan_basis<double>(j)));
    });
}

MatQ phi_f4_gamma_exact(const Quat<Rat>& p, const QMatQ& a) {
    if (!(norm2(p) == Rat(1))) throw std::invalid_argument("phi_f4_gamma: p is not a unit quaternion");
    if (!qmat_is_zero(a.conj_transpose() * a - QMatQ::identity(a.n)))
        throw std::invalid_argument("phi_f4_gamma: A is not symplectic-unitary");
    return mat_from_action<Rat>(27, [&](std::size_t j) {
        return coords(phi_f4_apply(p, a, jordan_basis<Rat>(j)));
    });
}

MatD phi4(const Quat<double>& p, const Quat<double>& q, const QMatF& b, double tol) {
    return phi_f4_gamma(p, block_diag1_2(q, b), tol);
}

MatQ phi4_exact(const Quat<Rat>& p, const Quat<Rat>& q, const QMatQ& b) {
    return phi_f4_gamma_exact(p, block_diag1_2(q, b));
}

// ------------------------------------------------------- E6 homomorphism

template <class R>
Mat<Cx<R>> kmap(const Quat<Cx<R>>& h) {
    // k(e1) = [[i,0],[0,-i]], k(e2) = [[0,-1],[1,0]], k(e3) = [[0,-i],[-i,0]]
    Mat<Cx<R>> m(2, 2);
    const Cx<R> i = Cx<R>::i();
    m(0, 0) = h.c[0] + i * h.c[1];
    m(1, 1) = h.c[0] - i * h.c[1];
    m(0, 1) = -h.c[2] - i * h.c[3];
    m(1, 0) = h.c[2] - i * h.c[3];
    return m;
}

template <class R>
Quat<Cx<R>> kmap_inv(const Mat<Cx<R>>& m, std::size_t i0, std::size_t j0) {
    const Cx<R> al = m(i0, j0), de = m(i0 + 1, j0 + 1);
    const Cx<R> be = m(i0, j0 + 1), ga = m(i0 + 1, j0);
    const Cx<R> half(R(1) / R(2));
    const Cx<R> i = Cx<R>::i();
    Quat<Cx<R>> h;
    h.c[0] = half * (al + de);
    h.c[1] = -i * (half * (al - de));
    h.c[2] = half * (ga - be);
    h.c[3] = i * (half * (ga + be));
    return h;
}

template Mat<Cx<Rat>> kmap<Rat>(const Quat<Cx<Rat>>&);
template Mat<Cx<double>> kmap<double>(const Quat<Cx<double>>&);
template Quat<Cx<Rat>> kmap_inv<Rat>(const Mat<Cx<Rat>>&, std::size_t, std::size_t);
template Quat<Cx<double>> kmap_inv<double>(const Mat<Cx<double>>&, std::size_t, std::size_t);

namespace {

template <class R>
Mat<Cx<R>> j6() {
    Mat<Cx<R>> j(6, 6);
    for (std::size_t b = 0; b < 3; ++b) {
        j(2 * b, 2 * b + 1) = Cx<R>(R(1));
        j(2 * b + 1, 2 * b) = Cx<R>(R(-1));
    }
    return j;
}

template <class R>
Mat<Cx<R>> k_of_qmat(const QMat<Cx<R>>& m) {
    Mat<Cx<R>> out(2 * m.n, 2 * m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) {
            Mat<Cx<R>> blk = kmap<R>(m(i, j));
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) out(2 * i + r, 2 * j + c) = blk(r, c);
        }
    return out;
}

template <class R>
QMat<Cx<R>> k_inv_of_cmat(const Mat<Cx<R>>& m) {
    QMat<Cx<R>> out(m.rows() / 2);
    for (std::size_t i = 0; i < out.n; ++i)
        for (std::size_t j = 0; j < out.n; ++j) out(i, j) = kmap_inv<R>(m, 2 * i, 2 * j);
    return out;
}

// phi6(p, A) X = kJ^{-1}(A kJ(M) tA) + p a k^{-1}(A*)
template <class R>
Jordan<Cx<R>> phi6_apply(const Quat<Cx<R>>& p, const Mat<Cx<R>>& a_mat, const QMat<Cx<R>>& kinv_astar,
                         const Jordan<Cx<R>>& x) {
    using CS = Cx<R>;
    HSplit<CS> s = h_split(x);
    QMat<CS> m = hermitian_qmat(s);
    Mat<CS> kj = k_of_qmat<R>(m) * j6<R>();
    Mat<CS> moved = a_mat * kj * a_mat.transposed();
    // k(M') = -kJ(M') J6
    Mat<CS> km = Cx<R>(R(-1)) * (moved * j6<R>());
    QMat<CS> mp = k_inv_of_cmat<R>(km);
    HSplit<CS> out;
    out.xi = {mp(0, 0).c[0], mp(1, 1).c[0], mp(2, 2).c[0]};
    out.m = {mp(1, 2), mp(2, 0), mp(0, 1)};
    for (std::size_t j = 0; j < 3; ++j) {
        Quat<CS> acc{};
        for (std::size_t k = 0; k < 3; ++k) acc += s.a[k] * kinv_astar(k, j);
        out.a[j] = p * acc;
    }
    return h_join(out);
}

template <class R>
Quat<Cx<R>> embed_quat(const Quat<R>& q) {
    Quat<Cx<R>> z;
    for (std::size_t k = 0; k < 4; ++k) z.c[k] = Cx<R>(q.c[k]);
    return z;
}

}  // namespace

MatD phi6(const Quat<double>& p, const Mat<CF>& a, double tol) {
    if (std::fabs(norm2(p) - 1.0) > tol)
        throw std::invalid_argument("phi6: p is not a unit quaternion");
    Mat<CF> gram = cmat_tau(a.transposed()) * a;
    double g_err = 0.0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            g_err = std::max(g_err, cabs(gram(i, j) - (i == j ? CF(1.0) : CF(0.0))));
    if (g_err > tol) throw std::invalid_argument("phi6: A is not unitary");
    CF d = det_c(a);
    if (cabs(d - CF(1.0)) > 100 * tol) throw std::invalid_argument("phi6: det A != 1");

    Mat<CF> astar = cmat_tau(a).transposed();
    QMat<CF> kinv_astar = k_inv_of_cmat<double>(astar);
    Quat<CF> pc = embed_quat(p);
    return mat_from_action<double>(54, [&](std::size_t j) {
        std::vector<double> v(54, 0.0);
        v[j] = 1.0;
        return coords(phi6_apply<double>(pc, a, kinv_astar, jordan_c_from_coords(v)));
    });
}

MatQ phi6_exact(const Quat<Rat>& p, const Mat<CRat>& a) {
    if (!(norm2(p) == Rat(1))) throw std::invalid_argument("phi6: p is not a unit quaternion");
    Mat<CRat> gram = cmat_tau(a.transposed()) * a;
    if (!(gram == Mat<CRat>::identity(6))) throw std::invalid_argument("phi6: A is not unitary");
    if (!(det_c(a) == CRat(Rat(1)))) throw std::invalid_argument("phi6: det A != 1");

    Mat<CRat> astar = cmat_tau(a).transposed();
    QMat<CRat> kinv_astar = k_inv_of_cmat<Rat>(astar);
    Quat<CRat> pc = embed_quat(p);
    return mat_from_action<Rat>(54, [&](std::size_t j) {
        std::vector<Rat> v(54, Rat(0));
        v[j] = 1;
        return coords(phi6_apply<Rat>(pc, a, kinv_astar, jordan_c_from_coords(v)));
    });
}

Mat<CRat> i2_matrix() {
    Mat<CRat> m = Mat<CRat>::identity(6);
    m(0, 0) = CRat(Rat(-1));
    m(1, 1) = CRat(Rat(-1));
    return m;
}

// ------------------------------------------------------- E7 homomorphisms

namespace {

template <class R>
FVec<Cx<R>> phi_su2_apply(const Mat<Cx<R>>& a, const FVec<Cx<R>>& p) {
    using CS = Cx<R>;
    const CS &a00 = a(0, 0), &a01 = a(0, 1), &a10 = a(1, 0), &a11 = a(1, 1);
    auto rot = [&](const CS& u, const CS& v) {
        return std::pair<CS, CS>(a00 * u + a01 * v, a10 * u + a11 * v);
    };
    FVec<CS> out = p;
    // (xi1, eta), (xi, eta1), (eta2, xi3), (eta3, xi2) transform by A
    auto [x1, et] = rot(p.X.xi[0], p.eta);
    out.X.xi[0] = x1;
    out.eta = et;
    auto [xx, e1] = rot(p.xi, p.Y.xi[0]);
    out.xi = xx;
    out.Y.xi[0] = e1;
    auto [e2, x3] = rot(p.Y.xi[1], p.X.xi[2]);
    out.Y.xi[1] = e2;
    out.X.xi[2] = x3;
    auto [e3, x2] = rot(p.Y.xi[2], p.X.xi[1]);
    out.Y.xi[2] = e3;
    out.X.xi[1] = x2;
    // (x1, y1) transforms by tau A
    const CS b00 = tau(a00), b01 = tau(a01), b10 = tau(a10), b11 = tau(a11);
    for (std::size_t c = 0; c < 8; ++c) {
        CS u = p.X.x[0].coord(c), v = p.Y.x[0].coord(c);
        out.X.x[0].coord(c) = b00 * u + b01 * v;
        out.Y.x[0].coord(c) = b10 * u + b11 * v;
    }
    return out;
}

template <class R>
void check_su2(const Mat<Cx<R>>& a, double tol) {
    Mat<Cx<R>> gram = cmat_tau(a.transposed()) * a;
    Cx<R> d = det_c(a);
    if constexpr (is_exact_v<R>) {
        (void)tol;
        if (!(gram == Mat<Cx<R>>::identity(2))) throw std::invalid_argument("phi_su2: not unitary");
        if (!(d == Cx<R>(R(1)))) throw std::invalid_argument("phi_su2: det != 1");
    } else {
        double g_err = 0.0;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                g_err = std::max(g_err, cabs(gram(i, j) - (i == j ? CF(1.0) : CF(0.0))));
        if (g_err > tol) throw std::invalid_argument("phi_su2: not unitary");
        if (cabs(d - CF(1.0)) > 100 * tol) throw std::invalid_argument("phi_su2: det != 1");
    }
}

}  // namespace

MatD phi_su2(const Mat<CF>& a, double tol) {
    check_su2<double>(a, tol);
    return mat_from_action<double>(112, [&](std::size_t j) {
        std::vector<double> v(112, 0.0);
        v[j] = 1.0;
        return coords(phi_su2_apply<double>(a, fvec_from_coords(v)));
    });
}

MatQ phi_su2_exact(const Mat<CRat>& a) {
    check_su2<Rat>(a, 0.0);
    return mat_from_action<Rat>(112, [&](std::size_t j) {
        std::vector<Rat> v(112, Rat(0));
        v[j] = 1;
        return coords(phi_su2_apply<Rat>(a, fvec_from_coords(v)));
    });
}

// ------------------------------------------- closed one-parameter forms

MatD alpha1_tilde54(const Quat<double>& a, bool allow_zero) {
    double r = std::sqrt(norm2(a));
    if (r == 0.0) {
        if (allow_zero) return MatD::identity(54);
        throw std::invalid_argument("alpha1_tilde: a = 0 (closed form undefined)");
    }
    const double cr = std::cos(r), sr = std::sin(r);
    const double ch = std::cos(r / 2), sh = std::sin(r / 2);
    const Oct<CF> ac = oct_cf(a);
    const CF i = CF::i();
    return mat_from_action<double>(54, [&](std::size_t j) {
        std::vector<double> v(54, 0.0);
        v[j] = 1.0;
        JordanCF x = jordan_c_from_coords(v);
        CF ax1 = inner(ac, x.x[0]);  // C-bilinear (a, x1)
        CF sum23 = x.xi[1] + x.xi[2];
        CF diff23 = CF(0.5) * (x.xi[1] - x.xi[2]);
        JordanCF out;
        out.xi[0] = x.xi[0];
        CF common = CF(0.5) * sum23 * CF(cr) + i * ax1 * CF(sr / r);
        out.xi[1] = diff23 + common;
        out.xi[2] = CF(-1.0) * diff23 + common;
        // x1' = x1 + i (xi2 + xi3) a sin r / (2r) - 2 (a, x1) a sin^2(r/2) / r^2
        out.x[0] = x.x[0] + (i * sum23 * CF(sr / (2 * r))) * ac +
                   (CF(-2.0) * ax1 * CF(sh * sh / (r * r))) * ac;
        out.x[1] = CF(ch) * x.x[1] + (i * CF(sh / r)) * conj(x.x[2] * ac);
        out.x[2] = CF(ch) * x.x[2] + (i * CF(sh / r)) * conj(ac * x.x[1]);
        return coords(out);
    });
}

namespace {

// block-diagonal P^C extension of a pair of J^C maps (xi, eta fixed)
MatD pc_block(const MatD& on_x, const MatD& on_y) {
    MatD m = MatD::identity(112);
    for (std::size_t i = 0; i < 54; ++i)
        for (std::size_t j = 0; j < 54; ++j) {
            m(i, j) = on_x(i, j);
            m(54 + i, 54 + j) = on_y(i, j);
        }
    return m;
}

}  // namespace

MatD alpha1_tilde(const Quat<double>& a, bool allow_zero) {
    return pc_block(alpha1_tilde54(a, allow_zero), alpha1_tilde54(-a, allow_zero));
}

MatD alpha23_tilde54(double t) {
    const CF eit = cx_exp_i(t), emit = cx_exp_i(-t);
    const CF eih = cx_exp_i(t / 2), emih = cx_exp_i(-t / 2);
    return mat_from_action<double>(54, [&](std::size_t j) {
        std::vector<double> v(54, 0.0);
        v[j] = 1.0;
        JordanCF x = jordan_c_from_coords(v);
        JordanCF out = x;
        out.xi[1] = eit * x.xi[1];
        out.xi[2] = emit * x.xi[2];
        out.x[1] = emih * x.x[1];
        out.x[2] = eih * x.x[2];
        return coords(out);
    });
}

MatD alpha23_tilde(double t) { return pc_block(alpha23_tilde54(t), alpha23_tilde54(-t)); }

MatD alpha_k(int k, double a) {
    if (k != 2 && k != 3) throw std::invalid_argument("alpha_k: k must be 2 or 3");
    const double ca = std::cos(a), sa = std::sin(a);
    const JordanCF ek = JordanCF::Ek(static_cast<std::size_t>(k));
    return mat_from_action<double>(112, [&](std::size_t j) {
        std::vector<double> v(112, 0.0);
        v[j] = 1.0;
        FVecF p = fvec_from_coords(v);
        auto pk = [&](const JordanCF& x) {
            return inner(x, ek) * ek + CF(4.0) * cross(ek, cross(ek, x));
        };
        FVecF out;
        out.X = p.X + CF(ca - 1.0) * pk(p.X) - CF(2.0 * sa) * cross(ek, p.Y) +
                (p.eta * CF(sa)) * ek;
        out.Y = p.Y + CF(ca - 1.0) * pk(p.Y) + CF(2.0 * sa) * cross(ek, p.X) -
                (p.xi * CF(sa)) * ek;
        out.xi = CF(sa) * inner(ek, p.Y) + CF(ca) * p.xi;
        out.eta = CF(-sa) * inner(ek, p.X) + CF(ca) * p.eta;
        return coords(out);
    });
}

MatD alpha_diag(double t) {
    const CF e2 = cx_exp_i(2 * t), em2 = cx_exp_i(-2 * t);
    const CF e1 = cx_exp_i(t), em1 = cx_exp_i(-t);
    return mat_from_action<double>(112, [&](std::size_t j) {
        std::vector<double> v(112, 0.0);
        v[j] = 1.0;
        FVecF p = fvec_from_coords(v);
        FVecF out = p;
        out.X.xi[0] = e2 * p.X.xi[0];
        out.X.x[1] = e1 * p.X.x[1];
        out.X.x[2] = e1 * p.X.x[2];
        out.Y.xi[0] = em2 * p.Y.xi[0];
        out.Y.x[1] = em1 * p.Y.x[1];
        out.Y.x[2] = em1 * p.Y.x[2];
        out.xi = em2 * p.xi;
        out.eta = e2 * p.eta;
        return coords(out);
    });
}

// ------------------------------------------------------------- samplers

Quat<double> sample_sp1(Rng& rng) { return rng.unit_quat(); }

QMatF sample_spn(std::size_t n, Rng& rng) {
    // Gram-Schmidt on quaternionic columns, <u, v> = sum conj(u_k) v_k
    std::vector<std::vector<Quat<double>>> cols(n, std::vector<Quat<double>>(n));
    for (auto& col : cols)
        for (auto& q : col) q = rng.quat();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Quat<double> proj{};
            for (std::size_t k = 0; k < n; ++k) proj += conj(cols[i][k]) * cols[j][k];
            for (std::size_t k = 0; k < n; ++k) cols[j][k] -= cols[i][k] * proj;
        }
        double nrm = 0.0;
        for (std::size_t k = 0; k < n; ++k) nrm += norm2(cols[j][k]);
        nrm = std::sqrt(nrm);
        for (std::size_t k = 0; k < n; ++k) cols[j][k] = (1.0 / nrm) * cols[j][k];
    }
    QMatF a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cols[j][i];
    return a;
}

Mat<CF> sample_sun(std::size_t n, Rng& rng) {
    std::vector<std::vector<CF>> cols(n, std::vector<CF>(n));
    for (auto& col : cols)
        for (auto& z : col) z = rng.cfloat();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            CF proj(0.0);
            for (std::size_t k = 0; k < n; ++k) proj += tau(cols[i][k]) * cols[j][k];
            for (std::size_t k = 0; k < n; ++k) cols[j][k] -= proj * cols[i][k];
        }
        double nrm = 0.0;
        for (std::size_t k = 0; k < n; ++k) nrm += abs2(cols[j][k]);
        nrm = std::sqrt(nrm);
        for (std::size_t k = 0; k < n; ++k) cols[j][k] = CF(1.0 / nrm) * cols[j][k];
    }
    Mat<CF> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cols[j][i];
    CF d = det_c(a);
    CF fix = tau(d);  // |d| = 1, so conj(d) = 1/d
    for (std::size_t i = 0; i < n; ++i) a(i, n - 1) *= fix;
    return a;
}

Mat<CF> sample_su2(Rng& rng) {
    CF a = rng.cfloat(), b = rng.cfloat();
    double nrm = std::sqrt(abs2(a) + abs2(b));
    a = CF(1.0 / nrm) * a;
    b = CF(1.0 / nrm) * b;
    Mat<CF> m(2, 2);
    m(0, 0) = a;
    m(0, 1) = CF(-1.0) * tau(b);
    m(1, 0) = b;
    m(1, 1) = tau(a);
    return m;
}

// --------------------------------------------- stabilizer linear solves

namespace {

// S_h = [[0, h], [conj h, 0]]
QMatQ s_h(const Quat<Rat>& h) {
    QMatQ s(2);
    s(0, 1) = h;
    s(1, 0) = conj(h);
    return s;
}

std::vector<Rat> qmat2_coords(const QMatQ& m) {
    std::vector<Rat> v;
    v.reserve(16);
    for (const auto& q : m.a)
        for (const Rat& c : q.c) v.push_back(c);
    return v;
}

}  // namespace

StabilizerSolve prop31_b_solve() {
    // unknown B in M(2, H): 16 real coordinates; B S_h = S_h B
    MatQ sys(4 * 16, 16);
    for (std::size_t u = 0; u < 16; ++u) {
        QMatQ b(2);
        b.a[u / 4].c[u % 4] = 1;
        for (std::size_t hi = 0; hi < 4; ++hi) {
            QMatQ sh = s_h(Quat<Rat>::basis(hi));
            std::vector<Rat> diff = qmat2_coords(b * sh - sh * b);
            for (std::size_t r = 0; r < 16; ++r) sys(hi * 16 + r, u) = diff[r];
        }
    }
    auto ns = nullspace(sys);
    StabilizerSolve out;
    out.solution_dim = ns.size();
    std::vector<Rat> id16 = qmat2_coords(QMatQ::identity(2));
    out.expected_line = ns.size() == 1 && in_span(id16, ns) && in_span(ns[0], {id16});
    return out;
}

StabilizerSolve prop34_pq_solve() {
    // unknowns (p, q), equations p h - h q = 0 for h in the quaternion basis
    MatQ sys(4 * 4, 8);
    for (std::size_t u = 0; u < 8; ++u) {
        Quat<Rat> p{}, q{};
        if (u < 4)
            p.c[u] = 1;
        else
            q.c[u - 4] = 1;
        for (std::size_t hi = 0; hi < 4; ++hi) {
            Quat<Rat> h = Quat<Rat>::basis(hi);
            Quat<Rat> diff = p * h - h * q;
            for (std::size_t r = 0; r < 4; ++r) sys(hi * 4 + r, u) = diff.c[r];
        }
    }
    auto ns = nullspace(sys);
    StabilizerSolve out;
    out.solution_dim = ns.size();
    std::vector<Rat> ones(8, Rat(0));
    ones[0] = 1;
    ones[4] = 1;
    out.expected_line = ns.size() == 1 && in_span(ones, ns) && in_span(ns[0], {ones});
    return out;
}

}  // namespace exc
