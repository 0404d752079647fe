#include <doctest.h>

#include "exc/groups.hpp"
#include "exc/orbits.hpp"
#include "exc/rng.hpp"

using namespace exc;

TEST_CASE("S^5: the pre-canonical point needs only the final step") {
    VPoint p;
    p.tag = VTag::V6;
    p.xi = CF(1.0);  // (E2 - E3, 0, 0, 0)
    CanonResult res = canonicalize_s5(p, 1e-12);
    CHECK(res.word.size() == 1);
    CHECK(res.word.front().generator == "alpha23_tilde");
    CHECK(res.residual <= 1e-14);
}

TEST_CASE("S^5: h = 0 skips the alpha~1 step") {
    VPoint p;
    p.tag = VTag::V6;
    p.xi = CF(0.6, -0.8);
    CanonResult res = canonicalize_s5(p, 1e-12);
    for (const WordStep& s : res.word) CHECK(s.generator != "alpha1_tilde");
    CHECK(res.residual <= 1e-13);
}

TEST_CASE("S^5: 25 seeded random points") {
    Rng rng(197);
    for (int s = 0; s < 25; ++s) {
        VPoint p = sample_sphere(VTag::V6, rng);
        CanonResult res = canonicalize_s5(p, 1e-12);
        CHECK(res.residual <= 1e-8);
        CHECK(res.word.size() <= 4);
    }
}

TEST_CASE("S^6: real xi triggers the pi/4 fallback") {
    VPoint p;
    p.tag = VTag::V7;
    p.xi = CF(0.6);
    p.eta = CF(0.8);
    CanonResult res = canonicalize_s6(p, 1e-12);
    REQUIRE(!res.word.empty());
    CHECK(res.word.front().generator == "alpha23");
    CHECK(res.word.front().params[0] == doctest::Approx(M_PI / 4));
    CHECK(res.residual <= 1e-13);
}

TEST_CASE("S^6: eta = 0 reduces to the S^5 path") {
    VPoint p;
    p.tag = VTag::V7;
    p.xi = CF(0.28, -0.96);
    CanonResult res = canonicalize_s6(p, 1e-12);
    // no eta to kill: the first step is already an S^5 generator
    CHECK(res.residual <= 1e-13);
    REQUIRE(res.word.size() >= 2);
    CHECK(res.word.front().generator != "alpha23");
    // the final step is alpha23(-pi/4)
    CHECK(res.word.back().generator == "alpha23");
    CHECK(res.word.back().params[0] == doctest::Approx(-M_PI / 4));
}

TEST_CASE("S^6: 25 seeded random points") {
    Rng rng(199);
    for (int s = 0; s < 25; ++s) {
        VPoint p = sample_sphere(VTag::V7, rng);
        CanonResult res = canonicalize_s6(p, 1e-12);
        CHECK(res.residual <= 1e-8);
        CHECK(res.word.size() <= 6);
    }
}

TEST_CASE("S^7: the canonical point returns to itself") {
    VPoint p;
    p.tag = VTag::V8;
    p.eta = CF(1.0);
    CanonResult res = canonicalize_s7(p, 1e-12);
    CHECK(res.residual <= 1e-13);
}

TEST_CASE("S^7: (0,-iE1,0,i) needs a single alpha(-pi/4)") {
    VPoint p;
    p.tag = VTag::V8;
    p.eta = CF(0.0, -1.0);  // Y.xi1 = -i, eta-coordinate = tau(-i) = i
    CanonResult res = canonicalize_s7(p, 1e-12);
    CHECK(res.residual <= 1e-13);
    std::size_t effective = 0;
    for (const WordStep& s : res.word)
        if (inf_norm(s.op - MatD::identity(112)) > 1e-12) ++effective;
    CHECK(effective <= 2);
}

TEST_CASE("S^7: 25 seeded random points with word properties") {
    Rng rng(211);
    for (int s = 0; s < 25; ++s) {
        VPoint p = sample_sphere(VTag::V8, rng);
        CanonResult res = canonicalize_s7(p, 1e-12);
        CHECK(res.residual <= 1e-8);
        CHECK(res.word.size() <= 8);
        // every word operator fixes the F1(h e4) line
        for (const WordStep& step : res.word)
            for (std::size_t b = 4; b < 8; ++b) {
                std::vector<double> v(112, 0.0);
                v[3 + b] = 1.0;
                std::vector<double> w = step.op.apply(v);
                for (std::size_t t = 0; t < 112; ++t)
                    CHECK(std::fabs(w[t] - v[t]) <= 1e-9);
            }
    }
}

TEST_CASE("norm precondition is enforced") {
    VPoint p;
    p.tag = VTag::V6;
    p.xi = CF(2.0);
    CHECK_THROWS_AS((void)canonicalize_s5(p, 1e-9), std::invalid_argument);
    p.tag = VTag::V7;
    CHECK_THROWS_AS((void)canonicalize_s6(p, 1e-9), std::invalid_argument);
    p.tag = VTag::V8;
    CHECK_THROWS_AS((void)canonicalize_s7(p, 1e-9), std::invalid_argument);
}

TEST_CASE("wrong tag is rejected") {
    VPoint p;
    p.tag = VTag::V7;
    p.eta = CF(1.0);
    CHECK_THROWS_AS((void)canonicalize_s5(p, 1e-9), std::invalid_argument);
}

TEST_CASE("mu-norm is preserved along the word") {
    Rng rng(223);
    VPoint p = sample_sphere(VTag::V8, rng);
    CanonResult res = canonicalize_s7(p, 1e-12);
    FVecF cur = embed(p);
    for (const WordStep& step : res.word) {
        cur = apply_op(step.op, cur);
        VPoint q = extract_vpoint(cur, VTag::V8, 1e-6);
        CHECK(std::fabs(mu_norm(q) - 1.0) <= 1e-9);
    }
}
