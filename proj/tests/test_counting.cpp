#include <doctest.h>

#include "oracles.hpp"
#include "redcyc/counting.hpp"
#include "support.hpp"

using namespace redcyc;

namespace {

BigInt big(long long v) { return BigInt(std::to_string(v)); }

}  // namespace

TEST_CASE("group orders") {
    const Orders o = orders(2, 1, 2);
    CHECK(o.stabilizer_algebra == 8);
    CHECK(o.stabilizer_group == 2);
    CHECK(o.general_linear == 6);
    CHECK(orders(4, 2, 2).stabilizer_group == 576);
    CHECK(orders(3, 1, 3).general_linear == 11232);
    CHECK_THROWS(orders(2, 2, 3));
    CHECK(omega(0, 5) == 1);
    CHECK(omega(2, 2) == Rational(3, 8));
}

TEST_CASE("q-binomials count subspaces") {
    for (int p : {2, 3})
        for (int r = 0; r <= 4; ++r)
            for (int d = 0; d <= r; ++d) {
                if (p == 3 && r == 4) continue;  // keep the brute force small
                CAPTURE(p);
                CAPTURE(r);
                CAPTURE(d);
                const long long brute = d == 0 ? 1 : oracle::subspace_count(r, d, p);
                CHECK(qbinom(static_cast<unsigned>(r), static_cast<unsigned>(d), static_cast<unsigned long>(p)) == big(brute));
            }
    CHECK(qbinom(4, 2, 2) == 35);
    CHECK_THROWS(qbinom(2, 3, 2));
}

TEST_CASE("coprime pair counts: closed form, recurrence, brute force") {
    for (int p : {2, 3})
        for (unsigned r = 0; r <= 6; ++r)
            for (unsigned s = 0; r + s <= 6; ++s) {
                const BigInt closed = coprime_count(r, s, static_cast<unsigned long>(p));
                CHECK(closed == coprime_count_recurrence(r, s, static_cast<unsigned long>(p)));
                CHECK(closed == big(oracle::coprime_pairs(static_cast<int>(r), static_cast<int>(s), p)));
                CHECK(closed == coprime_count_brute(r, s, Field::parse(std::to_string(p))));
            }
    CHECK(coprime_count(2, 1, 3) == 18);
    CHECK(coprime_count(0, 3, 2) == 8);
}

TEST_CASE("coprime pairs avoiding an irreducible f meet the lower bound") {
    for (int p : {2, 3}) {
        const FieldPtr f = Field::parse(std::to_string(p));
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned s = 1; s <= 3; ++s)
                for (unsigned d = 1; d <= std::min({r, s, 2u}); ++d) {
                    const BigInt bound = coprime_avoiding_lower(r, s, d, static_cast<unsigned long>(p));
                    CHECK(bound >= 0);
                    for (const Poly& g : irr_enumerate(d, f)) {
                        const oracle::Poly go(g.coeffs().begin(), g.coeffs().end());
                        const BigInt count = big(oracle::coprime_pairs(static_cast<int>(r), static_cast<int>(s), p, go));
                        CHECK(bound <= count);
                        CHECK(count == coprime_avoiding_brute(r, s, g));
                    }
                }
    }
    CHECK(coprime_avoiding_lower(1, 1, 1, 3) == 2);
    CHECK_THROWS(coprime_avoiding_lower(1, 1, 2, 3));
}

TEST_CASE("centralizer of diag(C(f), C(f)) in the stabilizer, d = 2, q = 2") {
    const FieldPtr f = Field::parse("2");
    const Mat c = companion(Poly::parse(f, "t^2+t+1"));
    const Mat x = Mat::block_diag(std::vector<Mat>{c, c});
    long long group = 0, central = 0;
    oracle::for_each_matrix(4, 4, 2, [&](const oracle::Mat& o) {
        if (o[0][2] || o[0][3] || o[1][2] || o[1][3]) return;
        if (oracle::det(o, 2) == 0) return;
        ++group;
        const Mat g = testing_support::from_oracle(f, o);
        if (g * x == x * g) ++central;
    });
    CHECK(group == 576);
    CHECK(central == 36);
    CHECK(centralizer_double_companion(2, 2) == 36);
    CHECK(double_stabilizer_order(2, 2) == 576);
    CHECK(centralizer_double_companion(2, 2) * class_size_double_companion(2, 2) == double_stabilizer_order(2, 2));
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul})
        for (unsigned d = 1; d <= 4; ++d)
            CHECK(centralizer_double_companion(d, q) * class_size_double_companion(d, q) == double_stabilizer_order(d, q));
}

TEST_CASE("non-cyclic proportion in M(2, q) sits inside its bounds") {
    for (int p : {2, 3, 5}) {
        long long non_cyclic = 0, total = 0;
        oracle::for_each_matrix(2, 2, p, [&](const oracle::Mat& m) {
            ++total;
            if (!oracle::is_cyclic(m, p)) ++non_cyclic;
        });
        CHECK(non_cyclic == p);  // only the scalars
        const Rational prop = make_rational(big(non_cyclic), big(total));
        const Interval b = np_bounds(2, static_cast<unsigned long>(p));
        CHECK(b.lower < prop);
        CHECK(prop < b.upper);
        const Interval s = np_bounds_simplified(static_cast<unsigned long>(p));
        CHECK(s.lower <= b.lower);
        CHECK(b.upper <= s.upper);
    }
    const Interval b = np_bounds(2, 2);
    CHECK(b.lower == Rational(1, 12));
    CHECK(b.upper == Rational(1, 3));
    CHECK(np_bounds(1, 7).upper == 0);
}

TEST_CASE("theorem bounds") {
    const TheoremBounds b3 = theorem_bounds(2, 1, 3);
    CHECK(b3.lower == Rational(5, 81));
    CHECK(b3.upper == Rational(44, 81));
    CHECK_FALSE(b3.upper_vacuous);
    const TheoremBounds b2 = theorem_bounds(4, 2, 2);
    CHECK(b2.lower == Rational(1, 12));
    CHECK(b2.upper == Rational(41, 24));
    CHECK(b2.upper_vacuous);
}

TEST_CASE("pi3 bound formulas") {
    CHECK(pi3_lower(2, 1, 3) == Rational(1, 9));
    const Rational qi(1, 3);
    const Rational inner = 1 - qi * qi - qi * qi * qi - qi * qi * qi * qi;
    CHECK(pi3_lower(5, 1, 3) == qi * qi * inner * inner * (1 - qi));
    CHECK(pi3_lower(5, 4, 3) == pi3_lower(5, 1, 3));
    CHECK(pi3_lower(6, 3, 2) == Rational(1, 4) * (1 - Rational(3, 2) + Rational(4, 8)));
    CHECK(pi3_lower_uniform(4) == Rational(1, 32));
    const Pi3Upper up = pi3_upper(2, 1, 3);
    CHECK(up.finite_sum == Rational(1, 4));
    CHECK(up.closed_form == Rational(1, 9) * (1 + Rational(58, 27)));
    for (unsigned long q : {3ul, 4ul, 5ul, 7ul})
        for (unsigned n = 2; n <= 10; ++n)
            for (unsigned r = 1; r < n; ++r) {
                CHECK(pi3_lower(n, r, q) <= pi3_upper(n, r, q).finite_sum);
                CHECK(pi3_upper(n, r, q).finite_sum <= pi3_upper(n, r, q).closed_form);
            }
}

TEST_CASE("limiting series") {
    CHECK(decimal_string(1 - table_series(1, Mode::algebra).evaluate(5), 6) == "0.0574336");
    CHECK(table_series(6, Mode::algebra).coeffs == table_series(7, Mode::algebra).coeffs);
    CHECK(table_series(2, Mode::group).coeffs == std::array<int, 8>{1, 0, -1, -3, 1, 3, 4, -2});
    CHECK(TableSeries::truncation_order == 7);
    CHECK_THROWS(table_series(0, Mode::algebra));
    CHECK_THROWS(table_series(8, Mode::group));
    const double g = Rational(1 - table_series(1, Mode::group).evaluate(5)).get_d();
    CHECK(g == doctest::Approx(0.0554752).epsilon(1e-6));
}

TEST_CASE("pentagonal bound on omega") {
    for (unsigned long q = 2; q <= 9; ++q) CHECK(pentagonal_check(q, 64));
}

TEST_CASE("bounds report bundles everything") {
    const BoundsReport b = bounds_report(4, 2, 3);
    CHECK(b.theorem_lower == Rational(5, 81));
    CHECK(b.theorem_upper == Rational(44, 81));
    CHECK(b.np_lower == np_bounds(2, 3).lower);
    CHECK(b.orders.stabilizer_algebra == 6561 * 81);
}
