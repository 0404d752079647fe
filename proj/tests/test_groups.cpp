#include <doctest.h>

#include "exc/groups.hpp"
#include "exc/linalg_float.hpp"
#include "exc/rng.hpp"

using namespace exc;

TEST_CASE("k is an algebra isomorphism with the pinned basis images") {
    Rng rng(157);
    for (int s = 0; s < 15; ++s) {
        Quat<CRat> h1, h2;
        for (std::size_t k = 0; k < 4; ++k) {
            h1.c[k] = rng.crational();
            h2.c[k] = rng.crational();
        }
        CHECK(kmap<Rat>(h1 * h2) == kmap<Rat>(h1) * kmap<Rat>(h2));
        CHECK(kmap_inv<Rat>(kmap<Rat>(h1)) == h1);
    }
}

TEST_CASE("membership tests accept the knowns and reject scalings") {
    Rng rng(163);
    CHECK(is_f4(MatD::identity(27), 1e-12));
    CHECK(is_f4_exact(sigma_op(Basis::J27).mat));
    CHECK(is_f4_exact(gamma_op(Basis::J27).mat));
    MatD two = MatD::identity(27);
    for (auto& x : two.data()) x *= 2.0;
    CHECK(!is_f4(two, 1e-9));

    CHECK(is_e6(to_float(gamma_op(Basis::JC54).mat), 1e-9, 10, rng));
    CHECK(is_e7(to_float(sigma_op(Basis::PC112).mat), 1e-9, 5, rng));
    CHECK(is_e7(to_float(lambda_op()), 1e-9, 5, rng));
    MatD bad = MatD::identity(112);
    bad(0, 0) = 2.0;
    CHECK(!is_e7(bad, 1e-9, 5, rng));
}

TEST_CASE("phi(-1, I1) is sigma and preconditions are enforced") {
    QMatQ i1 = QMatQ::identity(3);
    i1(0, 0) = Quat<Rat>(Rat(-1));
    CHECK(phi_f4_gamma_exact(Quat<Rat>(Rat(-1)), i1) == sigma_op(Basis::J27).mat);

    CHECK_THROWS_AS((void)phi_f4_gamma_exact(Quat<Rat>(Rat(2)), QMatQ::identity(3)),
                    std::invalid_argument);
    QMatQ bad = QMatQ::identity(3);
    bad(0, 1) = Quat<Rat>(Rat(1));
    CHECK_THROWS_AS((void)phi_f4_gamma_exact(Quat<Rat>(Rat(1)), bad), std::invalid_argument);
}

TEST_CASE("phi4 equals phi with the block-diagonal matrix") {
    Rng rng(167);
    Quat<double> p = sample_sp1(rng), q = sample_sp1(rng);
    QMatF b = sample_spn(2, rng);
    CHECK(inf_norm(phi4(p, q, b) - phi_f4_gamma(p, block_diag1_2(q, b))) == 0.0);
}

TEST_CASE("phi6 exact identities") {
    CHECK(phi6_exact(Quat<Rat>(Rat(-1)), i2_matrix()) == sigma_op(Basis::JC54).mat);
    CHECK(phi6_exact(Quat<Rat>(Rat(1)), Mat<CRat>::identity(6)) == MatQ::identity(54));
    Mat<CRat> me = CRat(Rat(-1)) * Mat<CRat>::identity(6);
    CHECK(phi6_exact(Quat<Rat>(Rat(-1)), me) == MatQ::identity(54));

    Mat<CRat> not_unitary = Mat<CRat>::identity(6);
    not_unitary(0, 0) = CRat(Rat(2));
    CHECK_THROWS_AS((void)phi6_exact(Quat<Rat>(Rat(1)), not_unitary), std::invalid_argument);
}

TEST_CASE("phi6 on exact inputs: homomorphism and the E6 identity at zero tolerance") {
    // rational unit complex numbers from a Pythagorean triple; det fixed to 1
    auto unit = [](long a, long b, long c) { return CRat(rat(a, c), rat(b, c)); };
    Mat<CRat> d1 = Mat<CRat>::identity(6), d2 = Mat<CRat>::identity(6);
    d1(0, 0) = unit(3, 4, 5);
    d1(1, 1) = unit(3, -4, 5);
    d1(2, 2) = unit(5, 12, 13);
    d1(3, 3) = unit(5, -12, 13);
    d2(0, 0) = unit(8, 15, 17);
    d2(1, 1) = unit(8, -15, 17);
    d2(4, 4) = unit(20, 21, 29);
    d2(5, 5) = unit(20, -21, 29);

    // a non-diagonal rational rotation mixing rows 1 and 4
    Mat<CRat> r = Mat<CRat>::identity(6);
    r(1, 1) = CRat(rat(3, 5));
    r(1, 4) = CRat(rat(4, 5));
    r(4, 1) = CRat(rat(-4, 5));
    r(4, 4) = CRat(rat(3, 5));
    d2 = d2 * r;

    Rng rng(229);
    Quat<Rat> p1 = rng.unit_quat_rat(), p2 = rng.unit_quat_rat();
    MatQ lhs = phi6_exact(p1, d1) * phi6_exact(p2, d2);
    MatQ rhs = phi6_exact(p1 * p2, d1 * d2);
    CHECK(lhs == rhs);

    // the E6 defining identity, exactly: tau a tau (X x Y) = aX x aY and
    // Hermitian inner product preservation
    MatQ a = phi6_exact(p1, d1);
    MatQ t = tau_op(Basis::JC54).mat;
    for (int s = 0; s < 5; ++s) {
        std::vector<Rat> vx(54), vy(54);
        for (auto& x : vx) x = rng.rational();
        for (auto& x : vy) x = rng.rational();
        JordanCQ X = jordan_c_from_coords(vx), Y = jordan_c_from_coords(vy);
        JordanCQ aX = jordan_c_from_coords(a.apply(vx));
        JordanCQ aY = jordan_c_from_coords(a.apply(vy));
        std::vector<Rat> lhs2 = t.apply(a.apply(t.apply(coords(cross(X, Y)))));
        CHECK(jordan_c_from_coords(lhs2) == cross(aX, aY));
        CHECK(inner(tau(aX), aY) == inner(tau(X), Y));
    }
}

TEST_CASE("phi(p, A) on exact inputs is an exact F4 element") {
    Rng rng(233);
    QMatQ a(3);
    for (std::size_t k = 0; k < 3; ++k) a(k, k) = rng.unit_quat_rat();
    MatQ m = phi_f4_gamma_exact(rng.unit_quat_rat(), a);
    CHECK(is_f4_exact(m));
    MatQ g = gamma_op(Basis::J27).mat;
    CHECK(m * g == g * m);
}

TEST_CASE("phi_su2 exact identities and the kernel products") {
    CHECK(phi_su2_exact(Mat<CRat>::identity(2)) == MatQ::identity(112));
    Mat<CRat> me = CRat(Rat(-1)) * Mat<CRat>::identity(2);
    MatQ pm = phi_su2_exact(me);
    MatQ s = sigma_op(Basis::PC112).mat, g = gamma_op(Basis::PC112).mat;
    MatQ id = MatQ::identity(112);
    CHECK(s * s == id);                 // (E, sigma, sigma)
    CHECK(pm * g * (-(s * g)) == id);   // (-E, gamma, -sigma gamma)
    CHECK(pm * (s * g) * (-g) == id);   // (-E, sigma gamma, -gamma)
}

TEST_CASE("alpha~1 input contract") {
    CHECK_THROWS_AS((void)alpha1_tilde54(Quat<double>{}, false), std::invalid_argument);
    CHECK(inf_norm(alpha1_tilde54(Quat<double>{}, true) - MatD::identity(54)) == 0.0);
}

TEST_CASE("alpha~1 matches its exponential and fixes E~1") {
    Rng rng(173);
    Quat<double> a = rng.quat();
    JordanCF f1a = JordanCF::F(1, CF::i() * oct_cf(a));
    CHECK(rel_residual(matrix_exp(mult_op54f(f1a)), alpha1_tilde54(a)) <= 1e-12);

    MatD m = alpha1_tilde(a);
    std::vector<double> e1t = coords(FVecF(JordanCF(), JordanCF::Ek(1), CF(0.0), CF(1.0)));
    std::vector<double> w = m.apply(e1t);
    for (std::size_t k = 0; k < 112; ++k) CHECK(std::fabs(w[k] - e1t[k]) <= 1e-12);
}

TEST_CASE("alpha~23 phases") {
    CHECK(inf_norm(alpha23_tilde54(0.0) - MatD::identity(54)) == 0.0);
    double t = 1.3;
    CHECK(inf_norm(alpha23_tilde54(t + 4 * M_PI) - alpha23_tilde54(t)) <= 1e-12);

    // t = pi/2 sends (E2 - E3, 0, 0, 0) to (i(E2 + E3), 0, 0, 0)
    FVecF p;
    p.X.xi[1] = CF(1.0);
    p.X.xi[2] = CF(-1.0);
    FVecF got = apply_op(alpha23_tilde(M_PI / 2), p);
    CHECK(cabs(got.X.xi[1] - CF(0.0, 1.0)) <= 1e-15);
    CHECK(cabs(got.X.xi[2] - CF(0.0, 1.0)) <= 1e-15);
}

TEST_CASE("alpha_k basics") {
    CHECK(inf_norm(alpha_k(2, 0.0) - MatD::identity(112)) == 0.0);
    CHECK_THROWS_AS((void)alpha_k(1, 0.5), std::invalid_argument);
    double a = 0.8, b = -0.6;
    CHECK(inf_norm(alpha_k(2, a) * alpha_k(3, b) - alpha_k(3, b) * alpha_k(2, a)) <= 1e-14);
}

TEST_CASE("alpha_diag paper value") {
    // alpha(-pi/4) (0, -iE1, 0, i) = (0, E1, 0, 1)
    FVecF p;
    p.Y.xi[0] = CF(0.0, -1.0);
    p.eta = CF(0.0, 1.0);
    FVecF got = apply_op(alpha_diag(-M_PI / 4), p);
    CHECK(cabs(got.Y.xi[0] - CF(1.0)) <= 1e-15);
    CHECK(cabs(got.eta - CF(1.0)) <= 1e-15);
    CHECK(cabs(got.xi) <= 1e-15);
}

TEST_CASE("verification harness flags a broken homomorphism") {
    Rng rng(179);
    // the good map: theta -> 2x2 rotation
    auto rot = [](const double& t) {
        MatD m(2, 2);
        m(0, 0) = std::cos(t);
        m(0, 1) = -std::sin(t);
        m(1, 0) = std::sin(t);
        m(1, 1) = std::cos(t);
        return m;
    };
    auto rep = verify_homomorphism<double>(
        rot, [](Rng& r) { return r.uniform(-3.0, 3.0); },
        [](const double& a, const double& b) { return a + b; }, 25, 1e-12, rng);
    CHECK(rep.pass);

    auto broken = verify_homomorphism<double>(
        [&](const double& t) { return rot(t * t); }, [](Rng& r) { return r.uniform(1.0, 2.0); },
        [](const double& a, const double& b) { return a + b; }, 25, 1e-12, rng);
    CHECK(!broken.pass);
}

TEST_CASE("kernel harness") {
    Rng rng(181);
    auto rot = [](const double& t) {
        MatD m(2, 2);
        m(0, 0) = std::cos(t);
        m(0, 1) = -std::sin(t);
        m(1, 0) = std::sin(t);
        m(1, 1) = std::cos(t);
        return m;
    };
    std::vector<double> kernel = {0.0, 2 * M_PI};
    auto rep = verify_kernel<double>(rot, kernel, [](Rng& r) { return r.uniform(0.5, 3.0); }, 20,
                                     1e-12, rng);
    CHECK(rep.pass);
}

TEST_CASE("stabilizer solves") {
    StabilizerSolve b = prop31_b_solve();
    CHECK(b.solution_dim == 1);
    CHECK(b.expected_line);
    StabilizerSolve pq = prop34_pq_solve();
    CHECK(pq.solution_dim == 1);
    CHECK(pq.expected_line);
}

TEST_CASE("samplers satisfy their group conditions") {
    Rng rng(191);
    QMatF a = sample_spn(3, rng);
    CHECK(max_abs(a.conj_transpose() * a - QMatF::identity(3)) <= 1e-12);

    Mat<CF> u = sample_sun(6, rng);
    Mat<CF> gram(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            CF acc(0.0);
            for (std::size_t k = 0; k < 6; ++k) acc += tau(u(k, i)) * u(k, j);
            gram(i, j) = acc - (i == j ? CF(1.0) : CF(0.0));
        }
    double g_err = 0.0;
    for (const CF& z : gram.data()) g_err = std::max(g_err, cabs(z));
    CHECK(g_err <= 1e-12);

    Mat<CF> s2 = sample_su2(rng);
    CF det = s2(0, 0) * s2(1, 1) - s2(0, 1) * s2(1, 0);
    CHECK(cabs(det - CF(1.0)) <= 1e-12);
}
