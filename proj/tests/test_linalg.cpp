#include <doctest.h>

#include "exc/lie.hpp"
#include "exc/linalg_exact.hpp"
#include "exc/linalg_float.hpp"
#include "exc/rng.hpp"

using namespace exc;

namespace {

MatQ random_matq(std::size_t r, std::size_t c, Rng& rng, double density = 0.6) {
    MatQ m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng.uniform() < density) m(i, j) = rng.rational();
    return m;
}

}  // namespace

TEST_CASE("rank and nullspace basics") {
    CHECK(rank(MatQ::identity(5)) == 5);
    MatQ z(3, 7);
    CHECK(rank(z) == 0);
    CHECK(nullspace(z).size() == 7);
}

TEST_CASE("rank + nullity = cols, nullspace vectors annihilate") {
    Rng rng(61);
    for (int s = 0; s < 15; ++s) {
        std::size_t r = 3 + s % 5, c = 2 + s % 7;
        MatQ m = random_matq(r, c, rng);
        auto ns = nullspace(m);
        CHECK(rank(m) + ns.size() == c);
        for (const auto& v : ns) {
            std::vector<Rat> w = m.apply(v);
            for (const Rat& x : w) CHECK(sgn(x) == 0);
        }
    }
}

TEST_CASE("rref idempotent and rank stable under row permutation") {
    Rng rng(67);
    MatQ m = random_matq(6, 8, rng);
    MatQ a = m;
    rref(a);
    MatQ b = a;
    rref(b);
    CHECK(a == b);

    MatQ perm = m;
    for (std::size_t j = 0; j < 8; ++j) {
        std::swap(perm(0, j), perm(4, j));
        std::swap(perm(2, j), perm(5, j));
    }
    CHECK(rank(m) == rank(perm));
}

TEST_CASE("inverse") {
    Rng rng(71);
    for (int s = 0; s < 5; ++s) {
        MatQ m = random_matq(5, 5, rng, 0.9);
        if (rank(m) < 5) continue;
        CHECK(m * inverse(m) == MatQ::identity(5));
    }
    MatQ sing(2, 2);
    sing(0, 0) = 1;
    sing(1, 0) = 2;
    CHECK_THROWS_AS((void)inverse(sing), std::domain_error);
}

TEST_CASE("involution eigenspaces") {
    auto full = eigenspace_involution(MatQ::identity(4), +1);
    CHECK(full.size() == 4);
    MatQ neg = -MatQ::identity(4);
    CHECK(eigenspace_involution(neg, +1).empty());

    // sigma on J has an 11-dimensional +1 eigenspace (xi1..3 and x1)
    MatQ s = sigma_op(Basis::J27).mat;
    CHECK(eigenspace_involution(s, +1).size() == 11);
    CHECK(eigenspace_involution(s, -1).size() == 16);

    MatQ not_inv(2, 2);
    not_inv(0, 0) = 2;
    not_inv(1, 1) = 1;
    CHECK_THROWS_AS((void)eigenspace_involution(not_inv, +1), std::invalid_argument);
}

TEST_CASE("span comparison") {
    Rng rng(73);
    std::vector<std::vector<Rat>> basis;
    for (int k = 0; k < 4; ++k) {
        std::vector<Rat> v(6);
        for (auto& x : v) x = rng.rational();
        basis.push_back(v);
    }
    std::vector<std::vector<Rat>> permuted = {basis[2], basis[0], basis[3], basis[1]};
    CHECK(span_equal(basis, permuted));

    std::vector<Rat> e1(6, Rat(0)), e2(6, Rat(0));
    e1[0] = 1;
    e2[1] = 1;
    CHECK(!in_span(e1, {e2}));
    CHECK(in_span(e1, {e1, e2}));
}

TEST_CASE("sparse nullspace agrees with the dense oracle") {
    Rng rng(79);
    for (int s = 0; s < 10; ++s) {
        MatQ m = random_matq(8, 10, rng, 0.4);
        std::vector<SparseVec> rows;
        for (std::size_t i = 0; i < 8; ++i) {
            std::vector<Rat> v(10);
            for (std::size_t j = 0; j < 10; ++j) v[j] = m(i, j);
            rows.push_back(SparseVec::from_dense(v));
        }
        auto a = sparse_nullspace(rows, 10);
        auto b = nullspace(m);
        CHECK(a.size() == b.size());
        CHECK(span_equal(a, b));
        CHECK(sparse_rank(rows, 10) == rank(m));
    }
}

TEST_CASE("sparse span coordinate solving") {
    Rng rng(83);
    SparseSpan span(12, /*track_coords=*/true);
    std::vector<std::vector<Rat>> gens;
    for (int k = 0; k < 5; ++k) {
        std::vector<Rat> v(12);
        for (auto& x : v) x = rng.rational();
        gens.push_back(v);
        span.insert(v);
    }
    // random combination must be recovered exactly
    std::vector<Rat> target(12, Rat(0)), coeff;
    for (int k = 0; k < 5; ++k) {
        Rat c = rng.rational();
        coeff.push_back(c);
        for (int j = 0; j < 12; ++j) target[j] += c * gens[k][j];
    }
    auto got = span.coords_in(target);
    REQUIRE(got.has_value());
    std::vector<Rat> back(12, Rat(0));
    for (int k = 0; k < 5; ++k)
        for (int j = 0; j < 12; ++j) back[j] += (*got)[k] * gens[k][j];
    CHECK(back == target);
}

TEST_CASE("modular rank") {
    CHECK(modular_rank(MatQ::identity(5), {2147483647u}).value == 5);

    // prime dividing a denominator is routed away from the prime list
    MatQ third(1, 1);
    third(0, 0) = rat(1, 3);
    ModularRank mr = modular_rank(third, {3u});
    CHECK(mr.value == 1);
    CHECK(mr.exact_fallback);  // no usable prime, exact oracle commits

    Rng rng(89);
    for (int s = 0; s < 10; ++s) {
        MatQ m = random_matq(7, 9, rng, 0.5);
        ModularRank got = modular_rank(m);
        CHECK(got.value == rank(m));
        CHECK(got.per_prime.size() >= 2);
    }
}

TEST_CASE("symmetric signature") {
    MatQ d(3, 3);
    d(0, 0) = 2;
    d(1, 1) = rat(-1, 3);
    CHECK(sym_signature(d).pos == 1);
    CHECK(sym_signature(d).neg == 1);
    CHECK(sym_signature(d).zero == 1);

    MatQ h(2, 2);  // hyperbolic plane
    h(0, 1) = 1;
    h(1, 0) = 1;
    Signature sig = sym_signature(h);
    CHECK(sig.pos == 1);
    CHECK(sig.neg == 1);

    // congruence-invariant on a random A^T D A
    Rng rng(97);
    MatQ a = random_matq(3, 3, rng, 0.9);
    if (rank(a) == 3) {
        MatQ m = a.transposed() * d * a;
        Signature s2 = sym_signature(m);
        CHECK(s2.pos == 1);
        CHECK(s2.neg == 1);
        CHECK(s2.zero == 1);
    }
}

TEST_CASE("matrix exponential") {
    MatD z(4, 4);
    CHECK(inf_norm(matrix_exp(z) - MatD::identity(4)) == 0.0);

    MatD n(2, 2);
    n(0, 1) = 1.0;
    MatD en = matrix_exp(n);
    CHECK(en(0, 0) == doctest::Approx(1.0));
    CHECK(en(0, 1) == doctest::Approx(1.0));
    CHECK(en(1, 0) == doctest::Approx(0.0));
    CHECK(en(1, 1) == doctest::Approx(1.0));

    Rng rng(101);
    MatD t(6, 6);
    for (auto& x : t.data()) x = rng.uniform(-1.0, 1.0);
    MatD neg = t;
    for (auto& x : neg.data()) x = -x;
    CHECK(inf_norm(matrix_exp(t, 1e-12, true) * matrix_exp(neg) - MatD::identity(6)) <= 1e-12);

    // exp((a+b)T) = exp(aT) exp(bT) for commuting scalar multiples
    double a = 0.7, b = -0.3;
    MatD ta = t, tb = t, tab = t;
    for (auto& x : ta.data()) x *= a;
    for (auto& x : tb.data()) x *= b;
    for (auto& x : tab.data()) x *= a + b;
    CHECK(inf_norm(matrix_exp(tab) - matrix_exp(ta) * matrix_exp(tb)) <= 1e-12);
}

TEST_CASE("operator basis labels guard binary operations") {
    OpQ a(MatQ::identity(27), Basis::J27);
    OpQ b(MatQ::identity(27), Basis::Generic);
    CHECK_THROWS_AS((void)(a * b), std::logic_error);
    CHECK_NOTHROW((void)(a * a));
}
