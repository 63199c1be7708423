#include <doctest.h>

#include "support.hpp"

using namespace redcyc;
using namespace testing_support;

TEST_CASE("char_poly, min_poly and det agree with the cofactor oracle") {
    Rng rng(1);
    for (int p : {2, 3, 5}) {
        const FieldPtr f = Field::parse(std::to_string(p));
        for (std::size_t n = 1; n <= 4; ++n)
            for (int i = 0; i < 60; ++i) {
                const Mat x = random_mat(f, n, n, rng);
                const oracle::Mat o = to_oracle(x);
                CHECK(char_poly(x).coeffs() == coeffs(oracle::char_poly(o, p)));
                CHECK(min_poly(x).coeffs() == coeffs(oracle::min_poly(o, p)));
                CHECK(det(x) == static_cast<Elem>(oracle::det(o, p)));
                CHECK(rank(x) == oracle::rank(o, p));
                CHECK(is_cyclic(x) == oracle::is_cyclic(o, p));
            }
    }
}

TEST_CASE("Cayley-Hamilton and m_X | c_X") {
    Rng rng(2);
    for (const char* q : {"2", "3", "4", "5", "9", "16"}) {
        const FieldPtr f = Field::parse(q);
        for (std::size_t n = 1; n <= 7; ++n)
            for (int i = 0; i < 15; ++i) {
                const Mat x = random_mat(f, n, n, rng);
                const Poly c = char_poly(x), m = min_poly(x);
                CHECK(c.degree() == static_cast<long>(n));
                CHECK(c.is_monic());
                CHECK(poly_eval(c, x) == Mat(f, n, n));
                CHECK(poly_eval(m, x) == Mat(f, n, n));
                CHECK(divides(m, c));
            }
    }
}

TEST_CASE("companion matrices are cyclic with char = min = a") {
    Rng rng(3);
    for (const char* q : {"2", "3", "4", "5"}) {
        const FieldPtr f = Field::parse(q);
        for (int i = 0; i < 200; ++i) {
            const unsigned d = 1 + static_cast<unsigned>(rng.below(6));
            std::uint64_t count = 1;
            for (unsigned k = 0; k < d; ++k) count *= f->q();
            const Poly a = Poly::monic_from_index(f, d, rng.below(count));
            const Mat c = companion(a);
            CHECK(char_poly(c) == a);
            CHECK(min_poly(c) == a);
            CHECK(is_cyclic(c));
            CHECK(krylov_span(unit_vector(d, 0), c).dim() == d);
        }
    }
}

TEST_CASE("cyclicity is invariant under conjugation") {
    Rng rng(4);
    for (const char* q : {"2", "3", "4"}) {
        const FieldPtr f = Field::parse(q);
        for (int i = 0; i < 200; ++i) {
            const std::size_t n = 2 + rng.below(4);
            const Mat x = random_mat(f, n, n, rng);
            Mat g = random_mat(f, n, n, rng);
            auto gi = inverse(g);
            while (!gi) {
                g = random_mat(f, n, n, rng);
                gi = inverse(g);
            }
            CHECK(g * *gi == Mat::identity(f, n));
            const Mat y = g * x * *gi;
            CHECK(is_cyclic(y) == is_cyclic(x));
            CHECK(char_poly(y) == char_poly(x));
        }
    }
}

TEST_CASE("scalars and 1x1 matrices") {
    const FieldPtr f = Field::parse("3");
    CHECK(is_cyclic(Mat::scalar(f, 1, 2)));
    CHECK_FALSE(is_cyclic(Mat::scalar(f, 2, 2)));
    CHECK(is_cyclic(Mat::parse(f, "1,1;0,1")));
    CHECK(min_poly(Mat::identity(f, 3)).to_string() == "t+2");
}

TEST_CASE("CyclicKernel matches is_cyclic on every 3x3 matrix over F_2 and F_3") {
    for (int p : {2, 3}) {
        const FieldPtr f = Field::parse(std::to_string(p));
        CyclicKernel k(f, 3);
        oracle::for_each_matrix(3, 3, p, [&](const oracle::Mat& o) {
            const Mat x = from_oracle(f, o);
            const auto res = k.test(x);
            REQUIRE(res.cyclic == is_cyclic(x));
            if (res.cyclic) REQUIRE(res.charpoly_index == char_poly(x).monic_index());
        });
    }
}

TEST_CASE("CyclicKernel matches is_cyclic on random larger matrices") {
    Rng rng(9);
    for (const char* q : {"2", "3", "4", "5", "8"}) {
        const FieldPtr f = Field::parse(q);
        for (std::size_t n : {4u, 6u, 9u}) {
            CyclicKernel k(f, n);
            for (int i = 0; i < 100; ++i) {
                Mat x = random_mat(f, n, n, rng);
                // Sparse and block-structured inputs reach the fallback path.
                if (i % 3 == 1) x = Mat::block_diag(std::vector<Mat>{Mat::scalar(f, 2, 1), random_mat(f, n - 2, n - 2, rng)});
                if (i % 3 == 2)
                    for (auto& e : x.entries())
                        if (rng.below(3) != 0) e = 0;
                const auto res = k.test(x);
                CHECK(res.cyclic == is_cyclic(x));
                if (res.cyclic) CHECK(res.charpoly_index == char_poly(x).monic_index());
            }
        }
    }
}

TEST_CASE("Subspace, krylov_span and kernels") {
    const FieldPtr f = Field::parse("2");
    Subspace s(f, 3);
    CHECK(s.insert({1, 1, 0}));
    CHECK(s.insert({0, 1, 1}));
    CHECK_FALSE(s.insert({1, 0, 1}));
    CHECK(s.dim() == 2);
    CHECK(s.contains(std::vector<Elem>{1, 0, 1}));
    CHECK_FALSE(s.contains(std::vector<Elem>{1, 0, 0}));

    const Mat x = Mat::parse(f, "0,1,0;0,0,1;0,0,0");
    CHECK(krylov_span(unit_vector(3, 0), x).dim() == 3);
    CHECK(krylov_span(unit_vector(3, 2), x).dim() == 1);
    CHECK(krylov_span(std::vector<Elem>{0, 0, 0}, x).dim() == 0);
    const Subspace ker = kernel_of_poly(Poly::parse(f, "t"), x);
    CHECK(ker.dim() == 1);
    CHECK(ker.contains(std::vector<Elem>{0, 0, 1}));
    CHECK(ker.is_invariant(x));
    CHECK(left_kernel(x).dim() == 1);
}

TEST_CASE("parse, arithmetic and shape errors") {
    const FieldPtr f = Field::parse("5");
    const Mat a = Mat::parse(f, "1,2;3,4");
    CHECK(a.to_string() == "1,2;3,4");
    CHECK((a * Mat::identity(f, 2)) == a);
    CHECK(a.pow(0) == Mat::identity(f, 2));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.transpose()(0, 1) == 3);
    CHECK(det(a) == f->from_int(-2));
    CHECK_FALSE(inverse(Mat::parse(f, "1,2;2,4")).has_value());
    CHECK_THROWS_AS(Mat::parse(f, "1,2;3"), DimensionError);
    CHECK_THROWS_AS(a * Mat(f, 3, 3), DimensionError);
    CHECK_THROWS(Mat::parse(f, "1,x;3,4"));
    const FieldPtr f4 = Field::parse("4");
    const Mat b = Mat::parse(f4, "t,1;0,t+1");
    CHECK(Mat::parse(f4, b.to_string()) == b);
}
