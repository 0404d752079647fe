#include <doctest.h>

#include "exc/groups.hpp"
#include "exc/lie.hpp"
#include "exc/linalg_exact.hpp"
#include "exc/linalg_float.hpp"
#include "exc/rng.hpp"

using namespace exc;

namespace {

JordanQ random_jordan(Rng& rng) {
    JordanQ X;
    for (std::size_t k = 0; k < 3; ++k) {
        X.xi[k] = rng.rational();
        X.x[k] = rng.oct_rat();
    }
    return X;
}

bool vec_zero(const std::vector<Rat>& v) {
    for (const Rat& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("f4 derivation algebra: dimension and the derivation property") {
    const auto& basis = f4_basis();
    CHECK(basis.size() == 52);

    Rng rng(137);
    std::vector<Rat> e = coords(JordanQ::E());
    for (const MatQ& d : basis) CHECK(vec_zero(d.apply(e)));

    // spot check the defining identity on random exact elements
    for (int s = 0; s < 5; ++s) {
        const MatQ& d = basis[static_cast<std::size_t>(rng.int_in(0, 51))];
        JordanQ x = random_jordan(rng), y = random_jordan(rng);
        JordanQ lhs = jordan_from_coords(d.apply(coords(jmul(x, y))));
        JordanQ rhs = jmul(jordan_from_coords(d.apply(coords(x))), y) +
                      jmul(x, jordan_from_coords(d.apply(coords(y))));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("so(8) lift reproduces the x1-slot action and kills the diagonal") {
    MatQ d1(8, 8);
    d1(4, 6) = 1;
    d1(6, 4) = -1;  // a rotation inside the e4..e7 block
    MatQ d = so8_lift(d1);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(vec_zero(d.apply(coords(jordan_basis<Rat>(k)))));
    for (std::size_t b = 0; b < 8; ++b) {
        Oct<Rat> img;
        for (std::size_t i = 0; i < 8; ++i) img.coord(i) = d1(i, b);
        JordanQ want = JordanQ::F(1, img);
        CHECK(jordan_from_coords(d.apply(coords(jordan_basis<Rat>(3 + b)))) == want);
    }
    // it is a derivation: lies in the f4 span
    SparseSpan span(27 * 27);
    for (const MatQ& b : f4_basis()) span.insert(mat_to_vec(b));
    CHECK(span.in_span(mat_to_vec(d)));
}

TEST_CASE("A~1(p) kills E1 and the F1(H e4) line") {
    Rng rng(139);
    Quat<Rat> p = rng.quat_rat();
    MatQ a1 = a1_deriv(p);
    CHECK(vec_zero(a1.apply(coords(JordanQ::Ek(1)))));
    for (std::size_t b = 4; b < 8; ++b)
        CHECK(vec_zero(a1.apply(coords(jordan_basis<Rat>(3 + b)))));
    // and acts as E2 -> F1(p) under the chosen normalization
    Oct<Rat> po(p, Quat<Rat>{});
    CHECK(jordan_from_coords(a1.apply(coords(JordanQ::Ek(2)))) == JordanQ::F(1, po));
    SparseSpan span(27 * 27);
    for (const MatQ& b : f4_basis()) span.insert(mat_to_vec(b));
    CHECK(span.in_span(mat_to_vec(a1)));
}

TEST_CASE("e6 and e7 dimensions by the exact rank oracle") {
    std::vector<std::vector<Rat>> v6, v7;
    for (const MatQ& m : e6_basis()) v6.push_back(mat_to_vec(m));
    CHECK(rank_of_rows(v6) == 78);
    for (const MatQ& m : e7_basis()) v7.push_back(mat_to_vec(m));
    CHECK(rank_of_rows(v7) == 133);
}

TEST_CASE("E1 v E1 equals (1/3)(2E1 - E2 - E3)~") {
    JordanCF e1 = JordanCF::Ek(1);
    MatD lhs = vee(e1, e1);
    JordanQ t = Rat(2) * JordanQ::Ek(1) - JordanQ::Ek(2) - JordanQ::Ek(3);
    MatD rhs = to_float(complexify_op(mult_op27(t)));
    for (auto& x : rhs.data()) x /= 3.0;
    CHECK(inf_norm(lhs - rhs) <= 1e-14);
}

TEST_CASE("phi_action recovers zero only at zero") {
    // zero arguments give the zero operator
    MatQ z = realize_e7(E7Elem{MatQ(), {}, {}, Rat(0)});
    CHECK(vec_zero(mat_to_vec(z)));
    // a nonzero nu alone acts nontrivially
    MatQ nu = realize_e7(E7Elem{MatQ(), {}, {}, Rat(1)});
    CHECK(!vec_zero(mat_to_vec(nu)));
}

TEST_CASE("family subalgebra sanity: L3_2 has so(4) invariants") {
    SubalgebraBasis l2 = family_subalgebra(FamilyId::L3_2);
    CHECK(l2.dim() == 6);
    Rng rng(149);
    StructureInvariants inv = structure_invariants(l2, rng);
    CHECK(inv.dim == 6);
    CHECK(inv.rank == 2);
    CHECK(inv.center_dim == 0);
    CHECK(inv.derived_dim == 6);
    CHECK(inv.killing.neg == 6);
    CHECK(inv.killing.zero == 0);
    CHECK(inv.killing.pos == 0);
    CHECK(inv.compact);
}

TEST_CASE("fixed_subalgebra validates involutions") {
    SubalgebraBasis f4 = f4_algebra();
    MatQ not_inv = MatQ::identity(27);
    not_inv(0, 0) = 2;
    CHECK_THROWS_AS((void)fixed_subalgebra(f4, {not_inv}), std::invalid_argument);
}

TEST_CASE("fixed_subalgebra agrees with the Ad-involution eigenspace route") {
    // sigma-fixed part of f4 is so(9), dimension 36
    SubalgebraBasis f4 = f4_algebra();
    MatQ s = sigma_op(Basis::J27).mat;
    SubalgebraBasis fixed = fixed_subalgebra(f4, {s});
    CHECK(fixed.dim() == 36);

    // independent route: Ad(sigma) on the 52-dim coordinate space
    SparseSpan span(27 * 27, true);
    for (const MatQ& b : f4.ops) span.insert(mat_to_vec(b));
    MatQ ad(52, 52);
    for (std::size_t k = 0; k < 52; ++k) {
        MatQ conj = s * f4.ops[k] * s;
        auto c = span.coords_in(mat_to_vec(conj));
        REQUIRE(c.has_value());
        for (std::size_t r = 0; r < 52; ++r) ad(r, k) = (*c)[r];
    }
    CHECK(eigenspace_involution(ad, +1).size() == fixed.dim());
}

TEST_CASE("su2 family elements commute with sigma and gamma") {
    MatQ s = sigma_op(Basis::PC112).mat, g = gamma_op(Basis::PC112).mat;
    for (const E7Elem& e : su2_family_elems()) {
        MatQ m = realize_e7(e);
        CHECK(s * m == m * s);
        CHECK(g * m == m * g);
    }
}

TEST_CASE("structure_invariants rejects a non-closed basis") {
    SubalgebraBasis bad;
    bad.basis = Basis::J27;
    bad.label = "bad";
    bad.ops.push_back(f4_basis()[0]);
    bad.ops.push_back(mult_op27(JordanQ::Ek(1)));  // not inside a common algebra
    Rng rng(151);
    CHECK_THROWS_AS((void)structure_invariants(bad, rng), std::invalid_argument);
}
