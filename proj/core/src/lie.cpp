#include "exc/lie.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "exc/groups.hpp"  // phi closed forms drive the calibration

namespace exc {

// ------------------------------------------------------- basic operators

MatQ mult_op27(const JordanQ& t) {
    return mat_from_action<Rat>(27, [&](std::size_t j) {
        return coords(jmul(t, jordan_basis<Rat>(j)));
    });
}

MatQ mult_op54(const JordanCQ& t) {
    return mat_from_action<Rat>(54, [&](std::size_t j) {
        std::vector<Rat> v(54, Rat(0));
        v[j] = 1;
        return coords(jmul(t, jordan_c_from_coords(v)));
    });
}

MatD mult_op54f(const JordanCF& t) {
    return mat_from_action<double>(54, [&](std::size_t j) {
        std::vector<double> v(54, 0.0);
        v[j] = 1.0;
        return coords(jmul(t, jordan_c_from_coords(v)));
    });
}

OpQ sigma_op(Basis b) {
    switch (b) {
        case Basis::J27:
            return OpQ(mat_from_action<Rat>(27, [](std::size_t j) {
                           return coords(sigma_j(jordan_basis<Rat>(j)));
                       }),
                       b);
        case Basis::JC54:
            return OpQ(mat_from_action<Rat>(54, [](std::size_t j) {
                           std::vector<Rat> v(54, Rat(0));
                           v[j] = 1;
                           return coords(sigma_j(jordan_c_from_coords(v)));
                       }),
                       b);
        case Basis::PC112:
            return OpQ(mat_from_action<Rat>(112, [](std::size_t j) {
                           std::vector<Rat> v(112, Rat(0));
                           v[j] = 1;
                           return coords(sigma_p(fvec_from_coords(v)));
                       }),
                       b);
        default: throw std::invalid_argument("sigma_op: unsupported basis");
    }
}

OpQ gamma_op(Basis b) {
    switch (b) {
        case Basis::J27:
            return OpQ(mat_from_action<Rat>(27, [](std::size_t j) {
                           return coords(gamma_j(jordan_basis<Rat>(j)));
                       }),
                       b);
        case Basis::JC54:
            return OpQ(mat_from_action<Rat>(54, [](std::size_t j) {
                           std::vector<Rat> v(54, Rat(0));
                           v[j] = 1;
                           return coords(gamma_j(jordan_c_from_coords(v)));
                       }),
                       b);
        case Basis::PC112:
            return OpQ(mat_from_action<Rat>(112, [](std::size_t j) {
                           std::vector<Rat> v(112, Rat(0));
                           v[j] = 1;
                           return coords(gamma_p(fvec_from_coords(v)));
                       }),
                       b);
        default: throw std::invalid_argument("gamma_op: unsupported basis");
    }
}

OpQ tau_op(Basis b) {
    switch (b) {
        case Basis::JC54:
            return OpQ(mat_from_action<Rat>(54, [](std::size_t j) {
                           std::vector<Rat> v(54, Rat(0));
                           v[j] = 1;
                           return coords(tau(jordan_c_from_coords(v)));
                       }),
                       b);
        case Basis::PC112:
            return OpQ(mat_from_action<Rat>(112, [](std::size_t j) {
                           std::vector<Rat> v(112, Rat(0));
                           v[j] = 1;
                           return coords(tau(fvec_from_coords(v)));
                       }),
                       b);
        default: throw std::invalid_argument("tau_op: unsupported basis");
    }
}

MatQ complexify_op(const MatQ& d) {
    MatQ m(54, 54);
    for (std::size_t i = 0; i < 27; ++i)
        for (std::size_t j = 0; j < 27; ++j) {
            if (sgn(d(i, j)) == 0) continue;
            m(i, j) = d(i, j);
            m(27 + i, 27 + j) = d(i, j);
        }
    return m;
}

namespace {

// multiplication by i on JC54 coordinates
MatQ j54() {
    MatQ m(54, 54);
    for (std::size_t a = 0; a < 27; ++a) {
        m(a, 27 + a) = -1;
        m(27 + a, a) = 1;
    }
    return m;
}

}  // namespace

// --------------------------------------------------------------------- f4

std::vector<SparseVec> f4_constraint_rows() {
    // structure constants S[a][b] of u_a o u_b, and the transposed lookup
    // SBC[b][c] = { (m, S_{m b}^c) }
    static const auto tables = [] {
        std::vector<std::vector<std::vector<std::pair<std::uint32_t, Rat>>>> s(
            27, std::vector<std::vector<std::pair<std::uint32_t, Rat>>>(27));
        std::vector<std::vector<std::vector<std::pair<std::uint32_t, Rat>>>> sbc(
            27, std::vector<std::vector<std::pair<std::uint32_t, Rat>>>(27));
        for (std::uint32_t a = 0; a < 27; ++a)
            for (std::uint32_t b = 0; b < 27; ++b) {
                std::vector<Rat> p = coords(jmul(jordan_basis<Rat>(a), jordan_basis<Rat>(b)));
                for (std::uint32_t c = 0; c < 27; ++c)
                    if (sgn(p[c]) != 0) {
                        s[a][b].emplace_back(c, p[c]);
                        sbc[b][c].emplace_back(a, p[c]);
                    }
            }
        return std::make_pair(s, sbc);
    }();
    const auto& S = tables.first;
    const auto& SBC = tables.second;

    std::vector<SparseVec> rows;
    rows.reserve(378 * 27);
    for (std::uint32_t a = 0; a < 27; ++a)
        for (std::uint32_t b = a; b < 27; ++b)
            for (std::uint32_t c = 0; c < 27; ++c) {
                std::map<std::uint32_t, Rat> row;
                for (const auto& [m, coef] : S[a][b]) row[c * 27 + m] += coef;
                for (const auto& [m, coef] : SBC[b][c]) row[m * 27 + a] -= coef;
                for (const auto& [m, coef] : SBC[a][c]) row[m * 27 + b] -= coef;
                SparseVec r;
                for (auto& [col, v] : row)
                    if (sgn(v) != 0) r.push(col, v);
                if (!r.empty()) rows.push_back(std::move(r));
            }
    return rows;
}

const std::vector<MatQ>& f4_basis() {
    static const std::vector<MatQ> basis = [] {
        std::vector<std::vector<Rat>> ns = sparse_nullspace(f4_constraint_rows(), 27 * 27);
        std::vector<MatQ> out;
        out.reserve(ns.size());
        for (auto& v : ns) out.push_back(vec_to_mat(v, 27));
        return out;
    }();
    return basis;
}

MatQ so8_lift(const MatQ& d1) {
    const auto& f4 = f4_basis();
    const std::size_t n = f4.size();

    // constraints: D E_k = 0 (k=1..3), D F1(e_b) = F1(d1 e_b)
    std::vector<std::vector<Rat>> inputs, targets;
    for (std::size_t k = 0; k < 3; ++k) {
        inputs.push_back(coords(jordan_basis<Rat>(k)));
        targets.emplace_back(27, Rat(0));
    }
    for (std::size_t b = 0; b < 8; ++b) {
        inputs.push_back(coords(jordan_basis<Rat>(3 + b)));
        Oct<Rat> img;
        for (std::size_t i = 0; i < 8; ++i) img.coord(i) = d1(i, b);
        targets.push_back(coords(JordanQ::F(1, img)));
    }

    MatQ aug(inputs.size() * 27, n + 1);
    for (std::size_t ci = 0; ci < inputs.size(); ++ci) {
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Rat> v = f4[k].apply(inputs[ci]);
            for (std::size_t r = 0; r < 27; ++r) aug(ci * 27 + r, k) = v[r];
        }
        for (std::size_t r = 0; r < 27; ++r) aug(ci * 27 + r, n) = targets[ci][r];
    }
    std::vector<std::size_t> piv = rref(aug);
    if (!piv.empty() && piv.back() == n)
        throw std::domain_error("so8_lift: inconsistent constraint system");
    if (piv.size() != n) throw std::domain_error("so8_lift: lift is not unique");

    MatQ d(27, 27);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        const Rat& x = aug(r, n);
        if (sgn(x) == 0) continue;
        d += x * f4[piv[r]];
    }
    return d;
}

MatQ a1_deriv(const Quat<Rat>& p) {
    Oct<Rat> po(p, Quat<Rat>{});
    MatQ f1p = mult_op27(JordanQ::F(1, po));
    MatQ e2 = mult_op27(JordanQ::Ek(2));
    return Rat(4) * commutator(f1p, e2);
}

// --------------------------------------------------------------------- e6

MatQ realize_e6(const E6Elem& e) {
    MatQ m(54, 54);
    if (e.delta.rows() == 27) m += complexify_op(e.delta);
    if (!is_zero(e.T)) m += j54() * complexify_op(mult_op27(e.T));
    return m;
}

const std::vector<MatQ>& e6_basis() {
    static const std::vector<MatQ> basis = [] {
        std::vector<MatQ> out;
        for (const MatQ& d : f4_basis()) out.push_back(complexify_op(d));
        std::vector<JordanQ> ts;
        ts.push_back(JordanQ::Ek(1) - JordanQ::Ek(2));
        ts.push_back(JordanQ::Ek(2) - JordanQ::Ek(3));
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t b = 0; b < 8; ++b)
                ts.push_back(JordanQ::F(k, Oct<Rat>::basis(b)));
        for (const JordanQ& t : ts) out.push_back(realize_e6(E6Elem{MatQ(), t}));
        return out;
    }();
    return basis;
}

// --------------------------------------------------------------------- e7

namespace {

JordanCQ apply_real_op(const MatQ& d, const JordanCQ& x) {
    std::vector<Rat> v = coords(x);
    std::vector<Rat> re(v.begin(), v.begin() + 27), im(v.begin() + 27, v.end());
    std::vector<Rat> dre = d.apply(re), dim_ = d.apply(im);
    std::vector<Rat> out(54);
    for (std::size_t k = 0; k < 27; ++k) {
        out[k] = dre[k];
        out[27 + k] = dim_[k];
    }
    return jordan_c_from_coords(out);
}

FVecQ phi_apply_exact(const E7Elem& e, const FVecQ& p, int y_sign) {
    const CRat nu(Rat(0), e.nu_im);
    const CRat third_nu(Rat(0), e.nu_im / 3);
    const CRat i1 = CRat::i();
    const JordanCQ B = -tau(e.A);
    const JordanCQ Tc = complexify(e.T);
    const bool has_delta = e.delta.rows() == 27;
    const bool has_T = !is_zero(e.T);
    const Rat ys(y_sign);

    // X' = phi X - (1/3) nu X + 2 B x Y + eta A
    JordanCQ xp;
    if (has_delta) xp += apply_real_op(e.delta, p.X);
    if (has_T) xp += i1 * jmul(Tc, p.X);
    xp -= third_nu * p.X;
    if (!is_zero(e.A)) {
        xp += CRat(Rat(2)) * cross(B, p.Y);
        xp += p.eta * e.A;
    }

    // Y' = 2 A x X + y_sign * tphi Y + (1/3) nu Y + xi B,  tphi = -delta + i T~
    JordanCQ yp;
    if (has_delta) yp -= CRat(ys) * apply_real_op(e.delta, p.Y);
    if (has_T) yp += CRat(ys) * (i1 * jmul(Tc, p.Y));
    yp += third_nu * p.Y;
    if (!is_zero(e.A)) {
        yp += CRat(Rat(2)) * cross(e.A, p.X);
        yp += p.xi * B;
    }

    CRat xip = inner(e.A, p.Y) + nu * p.xi;
    CRat etap = inner(B, p.X) - nu * p.eta;
    return FVecQ(std::move(xp), std::move(yp), std::move(xip), std::move(etap));
}

}  // namespace

MatQ realize_e7_with_sign(const E7Elem& e, int y_sign) {
    return mat_from_action<Rat>(112, [&](std::size_t j) {
        std::vector<Rat> v(112, Rat(0));
        v[j] = 1;
        return coords(phi_apply_exact(e, fvec_from_coords(v), y_sign));
    });
}

MatQ realize_e7(const E7Elem& e) { return realize_e7_with_sign(e, phi_y_sign()); }

const std::vector<MatQ>& e7_basis() {
    static const std::vector<MatQ> basis = [] {
        std::vector<MatQ> out;
        for (const MatQ& d : f4_basis()) out.push_back(realize_e7(E7Elem{d, {}, {}, Rat(0)}));
        std::vector<JordanQ> ts;
        ts.push_back(JordanQ::Ek(1) - JordanQ::Ek(2));
        ts.push_back(JordanQ::Ek(2) - JordanQ::Ek(3));
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t b = 0; b < 8; ++b)
                ts.push_back(JordanQ::F(k, Oct<Rat>::basis(b)));
        for (const JordanQ& t : ts) out.push_back(realize_e7(E7Elem{MatQ(), t, {}, Rat(0)}));
        for (std::size_t a = 0; a < 27; ++a) {
            JordanCQ re = complexify(jordan_basis<Rat>(a));
            out.push_back(realize_e7(E7Elem{MatQ(), {}, re, Rat(0)}));
            out.push_back(realize_e7(E7Elem{MatQ(), {}, imag_scale(jordan_basis<Rat>(a)), Rat(0)}));
        }
        out.push_back(realize_e7(E7Elem{MatQ(), {}, {}, Rat(1)}));
        return out;
    }();
    return basis;
}

MatD realize_phi_f(const MatD& phi, const MatD& tphi, const JordanCF& A, const JordanCF& B,
                   const CF& nu, int y_sign) {
    const CF third_nu(nu.re / 3.0, nu.im / 3.0);
    const double ys = y_sign;
    return mat_from_action<double>(112, [&](std::size_t j) {
        std::vector<double> v(112, 0.0);
        v[j] = 1.0;
        FVecF p = fvec_from_coords(v);

        JordanCF xp = jordan_c_from_coords(phi.apply(coords(p.X)));
        xp -= third_nu * p.X;
        xp += CF(2.0) * cross(B, p.Y);
        xp += p.eta * A;

        JordanCF yp = jordan_c_from_coords(tphi.apply(coords(p.Y)));
        yp = CF(ys) * yp;
        yp += third_nu * p.Y;
        yp += CF(2.0) * cross(A, p.X);
        yp += p.xi * B;

        CF xip = inner(A, p.Y) + nu * p.xi;
        CF etap = inner(B, p.X) - nu * p.eta;
        return coords(FVecF(std::move(xp), std::move(yp), xip, etap));
    });
}

MatD trace_form_transpose(const MatD& phi54) {
    // gram weights of the J basis: 1 on E_k, 2 on F_k(e_b)
    static const auto g = [] {
        std::array<double, 27> w{};
        for (std::size_t a = 0; a < 27; ++a) w[a] = a < 3 ? 1.0 : 2.0;
        return w;
    }();
    MatD t(54, 54);
    for (std::size_t a = 0; a < 27; ++a)
        for (std::size_t b = 0; b < 27; ++b) {
            double re = phi54(b, a), im = phi54(27 + b, a);
            double f = g[b] / g[a];
            t(a, b) = f * re;
            t(27 + a, b) = f * im;
            t(a, 27 + b) = -f * im;
            t(27 + a, 27 + b) = f * re;
        }
    return t;
}

MatD phi_action(const MatD& phi, const JordanCF& A, const JordanCF& B, const CF& nu) {
    return realize_phi_f(phi, trace_form_transpose(phi), A, B, nu, phi_y_sign());
}

MatD vee(const JordanCF& x, const JordanCF& w) {
    MatD xm = mult_op54f(x), wm = mult_op54f(w);
    JordanCF rest = jmul(x, w);
    CF c = inner(x, w);
    JordanCF e = JordanCF::E();
    rest -= CF(c.re / 3.0, c.im / 3.0) * e;
    return commutator(xm, wm) + mult_op54f(rest);
}

// ------------------------------------------------------------ subalgebras

SubalgebraBasis f4_algebra() {
    SubalgebraBasis b;
    b.ops = f4_basis();
    b.basis = Basis::J27;
    b.label = "f4";
    return b;
}

SubalgebraBasis e6_algebra() {
    SubalgebraBasis b;
    b.ops = e6_basis();
    b.basis = Basis::JC54;
    b.label = "e6";
    return b;
}

SubalgebraBasis e7_algebra() {
    SubalgebraBasis b;
    b.ops = e7_basis();
    b.basis = Basis::PC112;
    b.label = "e7";
    return b;
}

namespace {

bool is_diagonal(const MatQ& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && sgn(m(i, j)) != 0) return false;
    return true;
}

MatQ conjugate_by_involution(const MatQ& t, const MatQ& b, bool diag) {
    if (!diag) return t * b * t;
    MatQ out(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (sgn(b(i, j)) != 0) out(i, j) = t(i, i) * t(j, j) * b(i, j);
    return out;
}

}  // namespace

SubalgebraBasis fixed_subalgebra(const SubalgebraBasis& basis, const std::vector<MatQ>& involutions) {
    if (basis.ops.empty()) return basis;
    const std::size_t n = basis.dim();
    const std::size_t dim = basis.ops.front().rows();

    SparseSpan span(dim * dim);
    for (const MatQ& op : basis.ops) span.insert(mat_to_vec(op));

    std::map<std::uint64_t, SparseVec> rows;
    for (std::size_t ti = 0; ti < involutions.size(); ++ti) {
        const MatQ& t = involutions[ti];
        if (!(t * t == MatQ::identity(dim)))
            throw std::invalid_argument("fixed_subalgebra: operator is not an involution");
        const bool diag = is_diagonal(t);
        for (std::size_t k = 0; k < n; ++k) {
            MatQ diff = conjugate_by_involution(t, basis.ops[k], diag) - basis.ops[k];
            bool nonzero = false;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                    const Rat& v = diff(i, j);
                    if (sgn(v) == 0) continue;
                    nonzero = true;
                    std::uint64_t key = (static_cast<std::uint64_t>(ti) * dim + i) * dim + j;
                    rows[key].push(static_cast<std::uint32_t>(k), v);
                }
            if (nonzero) {
                // TbT must stay inside the span for the fixed-point problem
                // to be well posed
                MatQ conj = conjugate_by_involution(t, basis.ops[k], diag);
                if (!span.in_span(mat_to_vec(conj)))
                    throw std::invalid_argument(
                        "fixed_subalgebra: involution does not normalize the span");
            }
        }
    }

    std::vector<SparseVec> sys;
    sys.reserve(rows.size());
    for (auto& [key, r] : rows) sys.push_back(std::move(r));
    std::vector<std::vector<Rat>> ns = sparse_nullspace(sys, n);

    SubalgebraBasis out;
    out.basis = basis.basis;
    out.label = basis.label + "^{fixed}";
    for (const auto& c : ns) {
        MatQ acc(dim, dim);
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(c[k]) != 0) acc += c[k] * basis.ops[k];
        out.ops.push_back(std::move(acc));
    }
    return out;
}

const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::L3_2: return "L3_2";
        case FamilyId::L3_6: return "L3_6";
        case FamilyId::L3_10: return "L3_10";
        case FamilyId::L3_14: return "L3_14";
        case FamilyId::L3_18: return "L3_18";
        default: return "L3_20";
    }
}

std::size_t family_expected_dim(FamilyId id) {
    switch (id) {
        case FamilyId::L3_2: return 6;
        case FamilyId::L3_6: return 15;
        case FamilyId::L3_10: return 21;
        case FamilyId::L3_14: return 28;
        case FamilyId::L3_18: return 34;
        default: return 37;
    }
}

namespace {

// so(4) blocks of so(8) on octonion coordinates: lo = {1,e1,e2,e3},
// hi = {e4..e7}; lifted to derivations acting on the x1 slot
std::vector<MatQ> so4_lifts(bool hi) {
    const std::size_t base = hi ? 4 : 0;
    std::vector<MatQ> out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            MatQ d1(8, 8);
            d1(base + i, base + j) = 1;
            d1(base + j, base + i) = -1;
            out.push_back(so8_lift(d1));
        }
    return out;
}

std::vector<E7Elem> family_elems(FamilyId id) {
    std::vector<E7Elem> elems;
    auto add_delta = [&](const MatQ& d) { elems.push_back(E7Elem{d, {}, {}, Rat(0)}); };
    auto add_T = [&](const JordanQ& t, Rat nu_im = Rat(0)) {
        elems.push_back(E7Elem{MatQ(), t, {}, std::move(nu_im)});
    };
    auto add_A = [&](const JordanCQ& a) { elems.push_back(E7Elem{MatQ(), {}, a, Rat(0)}); };

    const bool has_d4 = id != FamilyId::L3_2;
    const bool has_d4p = id == FamilyId::L3_2 || id == FamilyId::L3_18 || id == FamilyId::L3_20;

    if (has_d4)
        for (const MatQ& d : so4_lifts(false)) add_delta(d);
    if (has_d4p)
        for (const MatQ& d : so4_lifts(true)) add_delta(d);
    if (id == FamilyId::L3_2) return elems;

    // A~1(p), p in H
    for (std::size_t b = 0; b < 4; ++b) add_delta(a1_deriv(Quat<Rat>::basis(b)));

    // i T~ part
    if (id == FamilyId::L3_6 || id == FamilyId::L3_10) {
        // T = eps (E2 - E3) + F1(q), q in H
        add_T(JordanQ::Ek(2) - JordanQ::Ek(3));
        for (std::size_t b = 0; b < 4; ++b)
            add_T(JordanQ::F(1, Oct<Rat>(Quat<Rat>::basis(b), {})));
    } else {
        // T = diag(eps1, eps2, eps3), sum 0, with nu = -(3/2) i eps1 tied on
        // the stabilizer families (free nu only in L3_20) + F1(q), q in H
        const bool tie_nu = id != FamilyId::L3_20;
        add_T(JordanQ::diag(Rat(1), Rat(-1), Rat(0)), tie_nu ? rat(-3, 2) : Rat(0));
        add_T(JordanQ::diag(Rat(0), Rat(1), Rat(-1)), Rat(0));
        for (std::size_t b = 0; b < 4; ++b)
            add_T(JordanQ::F(1, Oct<Rat>(Quat<Rat>::basis(b), {})));
    }

    // A part
    if (id == FamilyId::L3_10) {
        // A = alpha E2 + (tau alpha) E3 + F1(i x), x in H
        add_A(complexify(JordanQ::Ek(2) + JordanQ::Ek(3)));
        add_A(imag_scale(JordanQ::Ek(2) - JordanQ::Ek(3)));
        for (std::size_t b = 0; b < 4; ++b)
            add_A(imag_scale(JordanQ::F(1, Oct<Rat>(Quat<Rat>::basis(b), {}))));
    } else if (id == FamilyId::L3_14 || id == FamilyId::L3_18 || id == FamilyId::L3_20) {
        // alpha2 E2 + alpha3 E3 (+ alpha1 E1 for L3_20) + F1(x), x in H^C
        if (id == FamilyId::L3_20) {
            add_A(complexify(JordanQ::Ek(1)));
            add_A(imag_scale(JordanQ::Ek(1)));
        }
        for (std::size_t k = 2; k <= 3; ++k) {
            add_A(complexify(JordanQ::Ek(k)));
            add_A(imag_scale(JordanQ::Ek(k)));
        }
        for (std::size_t b = 0; b < 4; ++b) {
            JordanQ f = JordanQ::F(1, Oct<Rat>(Quat<Rat>::basis(b), {}));
            add_A(complexify(f));
            add_A(imag_scale(f));
        }
    }

    if (id == FamilyId::L3_20) elems.push_back(E7Elem{MatQ(), {}, {}, Rat(1)});
    return elems;
}

}  // namespace

SubalgebraBasis family_subalgebra(FamilyId id) {
    static std::map<FamilyId, SubalgebraBasis> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;

    SubalgebraBasis b;
    b.basis = Basis::PC112;
    b.label = family_name(id);
    for (const E7Elem& e : family_elems(id)) b.ops.push_back(realize_e7(e));
    cache[id] = b;
    return b;
}

std::vector<E7Elem> su2_family_elems() {
    std::vector<E7Elem> out;
    Rat two_thirds = rat(2, 3);
    JordanQ t = two_thirds * (Rat(2) * JordanQ::Ek(1) - JordanQ::Ek(2) - JordanQ::Ek(3));
    out.push_back(E7Elem{MatQ(), t, {}, Rat(1)});  // nu = i
    out.push_back(E7Elem{MatQ(), {}, complexify(JordanQ::Ek(1)), Rat(0)});   // a = 1
    out.push_back(E7Elem{MatQ(), {}, imag_scale(JordanQ::Ek(1)), Rat(0)});   // a = i
    return out;
}

// -------------------------------------------------------------- invariants

StructureInvariants structure_invariants(const SubalgebraBasis& b, Rng& rng) {
    const std::size_t n = b.dim();
    StructureInvariants inv;
    inv.dim = n;
    if (n == 0) return inv;
    const std::size_t dim = b.ops.front().rows();

    SparseSpan span(dim * dim, /*track_coords=*/true);
    for (const MatQ& op : b.ops)
        if (!span.insert(mat_to_vec(op)))
            throw std::invalid_argument("structure_invariants: basis is linearly dependent");

    // structure constants via exact coordinate solves
    std::vector<MatQ> ad(n, MatQ(n, n));
    std::vector<std::vector<Rat>> bracket_coords;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            MatQ br = commutator(b.ops[i], b.ops[j]);
            auto c = span.coords_in(mat_to_vec(br));
            if (!c) throw std::invalid_argument("structure_invariants: basis not bracket-closed");
            for (std::size_t k = 0; k < n; ++k) {
                ad[i](k, j) = (*c)[k];
                ad[j](k, i) = -(*c)[k];
            }
            bracket_coords.push_back(std::move(*c));
        }

    // rank: centralizer of a generic element, min over 3 samples
    std::size_t best = n;
    for (int trial = 0; trial < 3; ++trial) {
        MatQ adx(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            Rat r = rng.rational();
            if (sgn(r) != 0) adx += r * ad[i];
        }
        best = std::min(best, nullspace(adx).size());
    }
    inv.rank = best;

    // center: common nullspace of all ad_i
    MatQ stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = ad[i](r, c);
    inv.center_dim = nullspace(stacked).size();

    inv.derived_dim = rank_of_rows(bracket_coords);

    MatQ killing(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            MatQ p = ad[i] * ad[j];
            Rat tr(0);
            for (std::size_t k = 0; k < n; ++k) tr += p(k, k);
            killing(i, j) = tr;
            killing(j, i) = tr;
        }
    inv.killing = sym_signature(std::move(killing));
    inv.compact = inv.killing.pos == 0 && inv.killing.zero == inv.center_dim;
    return inv;
}

bool bracket_closed(const SubalgebraBasis& b, std::size_t max_pairs, Rng& rng) {
    const std::size_t n = b.dim();
    if (n == 0) return true;
    const std::size_t dim = b.ops.front().rows();
    SparseSpan span(dim * dim);
    for (const MatQ& op : b.ops) span.insert(mat_to_vec(op));

    const std::size_t all = n * (n - 1) / 2;
    if (all <= max_pairs) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!span.in_span(mat_to_vec(commutator(b.ops[i], b.ops[j])))) return false;
        return true;
    }
    for (std::size_t s = 0; s < max_pairs; ++s) {
        std::size_t i = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(n - 1)));
        std::size_t j = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(n - 1)));
        if (i == j) continue;
        if (!span.in_span(mat_to_vec(commutator(b.ops[i], b.ops[j])))) return false;
    }
    return true;
}

}  // namespace exc
