#include <doctest.h>

#include <cstdlib>
#include <map>

#include "redcyc/stab.hpp"
#include "support.hpp"

using namespace redcyc;
using namespace testing_support;

TEST_CASE("embed and project are inverse") {
    Rng rng(7);
    const FieldPtr f = Field::parse("3");
    for (int i = 0; i < 50; ++i) {
        const StabMat s = stab_sample(5, 2, f, rng, Mode::algebra);
        const Mat x = stab_embed(s);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 2; c < 5; ++c) CHECK(x(r, c) == 0);
        const StabMat back = stab_project(x, 2);
        CHECK(back.A == s.A);
        CHECK(back.B == s.B);
        CHECK(back.C == s.C);
    }
    Mat bad = Mat::identity(f, 3);
    bad.set(0, 2, 1);
    CHECK_THROWS_AS(stab_project(bad, 1), DimensionError);
    CHECK_THROWS_AS(StabMat(Mat(f, 2, 2), Mat(f, 2, 2), Mat(f, 1, 2)), DimensionError);
}

TEST_CASE("U = <e_1..e_r> is invariant under every sample") {
    Rng rng(8);
    const FieldPtr f = Field::parse("4");
    for (int i = 0; i < 50; ++i) {
        const Mat x = stab_embed(stab_sample(4, 2, f, rng, Mode::algebra));
        Subspace u(f, 4);
        u.insert(unit_vector(4, 0));
        u.insert(unit_vector(4, 1));
        CHECK(u.is_invariant(x));
    }
}

TEST_CASE("algebra samples are uniform on M(V)_U (chi-square, n=2, r=1, q=2)") {
    Rng rng(2024);
    const FieldPtr f = Field::parse("2");
    std::map<std::vector<Elem>, int> seen;
    for (int i = 0; i < 8000; ++i) seen[stab_embed(stab_sample(2, 1, f, rng, Mode::algebra)).entries()]++;
    CHECK(seen.size() == 8);
    double chi2 = 0;
    for (const auto& [k, v] : seen) chi2 += (v - 1000.0) * (v - 1000.0) / 1000.0;
    CHECK(chi2 < 24.32);  // 7 degrees of freedom, p = 0.001
}

TEST_CASE("sampling is deterministic per seed") {
    const FieldPtr f = Field::parse("5");
    Rng a(99), b(99);
    for (int i = 0; i < 20; ++i) CHECK(stab_embed(stab_sample(4, 1, f, a, Mode::group)) == stab_embed(stab_sample(4, 1, f, b, Mode::group)));
}

TEST_CASE("group samples are invertible and uniform over the blocks") {
    Rng rng(12);
    const FieldPtr f = Field::parse("2");
    std::map<std::vector<Elem>, int> seen;
    for (int i = 0; i < 6000; ++i) {
        const StabMat s = stab_sample(2, 1, f, rng, Mode::group);
        CHECK(det(stab_embed(s)) != 0);
        seen[stab_embed(s).entries()]++;
    }
    // GL(V)_U for n = 2, r = 1, q = 2 has 2 elements; each should appear about 3000 times.
    CHECK(seen.size() == 2);
    for (const auto& [k, v] : seen) CHECK(std::abs(v - 3000) < 300);
}

TEST_CASE("block-diagonal witnesses") {
    const FieldPtr f2 = Field::parse("2"), f3 = Field::parse("3");
    {
        const StabMat s = build_xfgh(Poly::parse(f3, "t"), Poly::parse(f3, "t+1"), Poly::parse(f3, "t+2"));
        CHECK(s.n == 4);
        CHECK(s.r == 2);
        const Mat x = stab_embed(s);
        CHECK(is_cyclic(s.A));
        CHECK(is_cyclic(s.B));
        CHECK_FALSE(is_cyclic(x));
        CHECK(min_poly(x).to_string() == "t^3+2*t");
        CHECK(char_poly(x) == Poly::parse(f3, "t^2") * Poly::parse(f3, "t+1") * Poly::parse(f3, "t+2"));
    }
    {
        // degree-0 g: r = deg f
        const StabMat s = build_xfgh(Poly::parse(f2, "t+1"), Poly::parse(f2, "1"), Poly::parse(f2, "t"));
        CHECK(s.n == 3);
        CHECK(s.r == 1);
        CHECK(stab_embed(s) == Mat::parse(f2, "1,0,0;0,1,0;0,0,0"));
        CHECK_FALSE(is_cyclic(stab_embed(s)));
    }
    {
        const FieldPtr f = Field::parse("2");
        const StabMat s = build_xfgh(Poly::parse(f, "t^2+t+1"), Poly::parse(f, "t"), Poly::parse(f, "t+1"));
        CHECK(s.n == 6);
        CHECK_FALSE(is_cyclic(stab_embed(s)));
    }
    CHECK_THROWS_AS(build_xfgh(Poly::parse(f2, "t"), Poly::parse(f2, "t+1"), Poly::parse(f2, "t+1")), std::invalid_argument);
    CHECK_THROWS_AS(build_xfgh(Poly::parse(f2, "t^2+1"), Poly::parse(f2, "1"), Poly::parse(f2, "1")), std::invalid_argument);
    CHECK_THROWS_AS(build_xfgh(Poly::parse(f2, "t"), Poly::parse(f2, "t"), Poly::parse(f2, "t+1")), std::invalid_argument);
}
