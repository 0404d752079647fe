#include <doctest.h>

#include "exc/octonion.hpp"
#include "exc/rng.hpp"
#include "exc/scalars.hpp"

using namespace exc;

namespace {

// Independent multiplication oracle: an 8x8 structure-constant table built
// here from the doubling rule with a test-local quaternion product. oct_mul
// must agree with the bilinear extension of this table.
struct OctTable {
    // table[a][b] = (index, sign)
    int idx[8][8];
    int sgn[8][8];

    OctTable() {
        // quaternion basis products as (index, sign), e1 e2 = e3
        auto qmul = [](int a, int b, int& i, int& s) {
            static const int tbl[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
            static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
            i = tbl[a][b];
            s = sg[a][b];
        };
        auto qconj_sign = [](int a) { return a == 0 ? 1 : -1; };
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                int am = a % 4, bm = b % 4;
                bool ae4 = a >= 4, be4 = b >= 4;
                int i, s;
                if (!ae4 && !be4) {  // m1 m2
                    qmul(am, bm, i, s);
                } else if (ae4 && be4) {  // -conj(a2) a1
                    qmul(bm, am, i, s);
                    s *= -qconj_sign(bm);
                } else if (!ae4 && be4) {  // (a2 m1) e4
                    qmul(bm, am, i, s);
                    i += 4;
                } else {  // (a1 conj(m2)) e4
                    qmul(am, bm, i, s);
                    s *= qconj_sign(bm);
                    i += 4;
                }
                idx[a][b] = i;
                sgn[a][b] = s;
            }
    }

    Oct<Rat> mul(const Oct<Rat>& x, const Oct<Rat>& y) const {
        Oct<Rat> z;
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                Rat c = x.coord(a) * y.coord(b);
                if (sgn[a][b] < 0) c = -c;
                z.coord(idx[a][b]) += c;
            }
        return z;
    }
};

}  // namespace

TEST_CASE("octonion product matches the independent table oracle") {
    OctTable oracle;
    Rng rng(101);
    for (int s = 0; s < 30; ++s) {
        Oct<Rat> x = rng.oct_rat(), y = rng.oct_rat();
        CHECK(x * y == oracle.mul(x, y));
    }
}

TEST_CASE("octonion unit and basis products") {
    Oct<Rat> one(Rat(1));
    Rng rng(7);
    Oct<Rat> x = rng.oct_rat();
    CHECK(one * x == x);
    CHECK(x * one == x);

    Oct<Rat> e1 = Oct<Rat>::basis(1), e2 = Oct<Rat>::basis(2), e3 = Oct<Rat>::basis(3);
    Oct<Rat> e4 = Oct<Rat>::basis(4);
    CHECK(e4 * e4 == -one);
    CHECK(e1 * e2 == e3);
    CHECK(e1 * e4 == Oct<Rat>::basis(5));
    CHECK(e2 * e4 == Oct<Rat>::basis(6));
    CHECK(e3 * e4 == Oct<Rat>::basis(7));
}

TEST_CASE("conjugation, inner product and norm") {
    Oct<Rat> e1 = Oct<Rat>::basis(1), e4 = Oct<Rat>::basis(4);
    CHECK(conj(e4) == -e4);
    CHECK(inner(e1, e1) == Rat(1));
    CHECK(norm2(e1 * e4) == Rat(1));  // |e1 e4| = 1

    Rng rng(11);
    Oct<Rat> one(Rat(1));
    for (int s = 0; s < 20; ++s) {
        Oct<Rat> x = rng.oct_rat(), y = rng.oct_rat();
        // conj(x) = 2 (x, 1) 1 - x
        CHECK(conj(x) == Rat(2) * inner(x, one) * one - x);
        // (x, y) = Re(x conj(y)) agrees with the coordinate dot product
        CHECK(inner(x, y) == real_part(x * conj(y)));
        // norm multiplicativity, exact
        CHECK(norm2(x * y) == norm2(x) * norm2(y));
        // alternativity
        CHECK(x * (x * y) == (x * x) * y);
        CHECK((y * x) * x == y * (x * x));
    }
}

TEST_CASE("basis orthonormal under the inner product") {
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            CHECK(inner(Oct<Rat>::basis(a), Oct<Rat>::basis(b)) == Rat(a == b ? 1 : 0));
}

TEST_CASE("float norm multiplicativity within 1e-12 relative") {
    Rng rng(13);
    for (int s = 0; s < 20; ++s) {
        Oct<double> x = rng.oct(), y = rng.oct();
        double lhs = norm2(x * y), rhs = norm2(x) * norm2(y);
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)));
    }
}

TEST_CASE("gamma is an involutive algebra automorphism") {
    Oct<Rat> e1 = Oct<Rat>::basis(1), e4 = Oct<Rat>::basis(4);
    CHECK(gamma(e4) == -e4);
    CHECK(gamma(e1) == e1);
    Rng rng(17);
    for (int s = 0; s < 20; ++s) {
        Oct<Rat> x = rng.oct_rat(), y = rng.oct_rat();
        CHECK(gamma(gamma(x)) == x);
        CHECK(gamma(x * y) == gamma(x) * gamma(y));
    }
}

TEST_CASE("tau on the complexified algebra") {
    using OC = Oct<CRat>;
    OC u = complexify(Oct<Rat>::basis(2));
    CHECK(tau(u) == u);  // v = 0 fixed

    OC i_one;
    i_one.coord(0) = CRat::i();
    CHECK(tau(i_one) == -i_one);

    Rng rng(19);
    for (int s = 0; s < 20; ++s) {
        OC x = rng.oct_crat(), y = rng.oct_crat();
        CHECK(tau(tau(x)) == x);
        CHECK(tau(x * y) == tau(x) * tau(y));       // multiplicative
        CHECK(tau(gamma(x)) == gamma(tau(x)));      // commutes with gamma
        CHECK(tau(conj(x)) == conj(tau(x)));        // commutes with conjugation
    }
}

TEST_CASE("quaternion associativity and norm") {
    Rng rng(23);
    for (int s = 0; s < 20; ++s) {
        Quat<Rat> a = rng.quat_rat(), b = rng.quat_rat(), c = rng.quat_rat();
        CHECK((a * b) * c == a * (b * c));
        CHECK(norm2(a * b) == norm2(a) * norm2(b));
        CHECK(conj(a * b) == conj(b) * conj(a));
    }
}

TEST_CASE("exact unit quaternion sampler lies on the unit sphere") {
    Rng rng(29);
    for (int s = 0; s < 10; ++s) CHECK(norm2(rng.unit_quat_rat()) == Rat(1));
}
