#include <doctest.h>

#include "redcyc/report_io.hpp"

using namespace redcyc;

namespace {

void check_same(const DensityReport& a, const DensityReport& b) {
    CHECK(a.n == b.n);
    CHECK(a.r == b.r);
    CHECK(a.field->same_as(*b.field));
    CHECK(a.mode == b.mode);
    CHECK(a.method == b.method);
    CHECK(a.total == b.total);
    CHECK(a.n1 == b.n1);
    CHECK(a.n2 == b.n2);
    CHECK(a.n3 == b.n3);
    CHECK(a.pi == b.pi);
    CHECK(a.pi3 == b.pi3);
    CHECK(a.seed == b.seed);
    CHECK(a.trials == b.trials);
    CHECK(a.verdict == b.verdict);
    CHECK(a.bounds.pi3_upper == b.bounds.pi3_upper);
    CHECK(a.bounds.orders.stabilizer_group == b.bounds.orders.stabilizer_group);
    if (a.pi_est) {
        CHECK(a.pi_est->value == b.pi_est->value);
        CHECK(a.pi_est->lower == b.pi_est->lower);
        CHECK(a.pi2_est->upper == b.pi2_est->upper);
    }
}

}  // namespace

TEST_CASE("rationals serialize exactly") {
    const Json j = rational_json(Rational(1, 9));
    CHECK(j["exact"] == "1/9");
    CHECK(j["decimal"].get<double>() == 0.111111111111);
    CHECK(rational_from_json(j) == Rational(1, 9));
}

TEST_CASE("exact report JSON round trip") {
    for (const char* q : {"3", "4", "9"}) {
        const DensityReport rep = enumerate_exact(3, 1, Field::parse(q), Mode::algebra);
        const Json j = to_json(rep);
        const DensityReport back = report_from_json(Json::parse(j.dump()));
        check_same(rep, back);
        CHECK(to_json(back).dump() == j.dump());
    }
}

TEST_CASE("Monte Carlo report JSON round trip") {
    const DensityReport rep = monte_carlo(5, 2, Field::parse("2^3"), Mode::group, 2000, 77);
    const Json j = to_json(rep);
    CHECK(j["field"]["modulus"] == "t^3+t+1");
    CHECK(j["field"]["p"] == 2);
    CHECK(j["field"]["k"] == 3);
    const DensityReport back = report_from_json(Json::parse(j.dump()));
    check_same(rep, back);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("bounds JSON round trip") {
    const BoundsReport b = bounds_report(6, 3, 7);
    const Json j = to_json(b);
    CHECK(to_json(bounds_from_json(Json::parse(j.dump()))).dump() == j.dump());
    CHECK(j["theorem_upper"]["exact"] == fraction_string(b.theorem_upper));
}

TEST_CASE("CSV rows") {
    CHECK(csv_header() == "n,r,q,mode,method,pi,pi1,pi2,pi3,lower,upper,verdicts,seed,trials");
    const DensityReport rep = enumerate_exact(2, 1, Field::parse("3"), Mode::algebra);
    const std::string row = csv_row(rep);
    CHECK(row.rfind("2,1,3,algebra,exact,1/9,0,0,1/9,5/81,44/81,theorem_lower=pass;", 0) == 0);
    CHECK(std::count(row.begin(), row.end(), ',') == 13);
    SweepPoint failed;
    failed.n = 10;
    failed.r = 5;
    failed.q = "5";
    failed.error = "too big";
    failed.budget_exceeded = true;
    const std::string frow = csv_row(failed);
    CHECK(std::count(frow.begin(), frow.end(), ',') == 13);
    CHECK(frow.find("budget_exceeded") != std::string::npos);
}

TEST_CASE("probe report JSON") {
    const ProbeReport rep = probe(GeneratedAlgebra::full(Field::parse("2"), 3), 50, 3);
    const Json j = to_json(rep);
    CHECK(j["verdict"] == "cyclic_pair_found");
    CHECK(j.contains("pair"));
    CHECK(j["seed"] == 3);
}
