#ifndef REDCYC_CENSUS_HPP
#define REDCYC_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "redcyc/counting.hpp"
#include "redcyc/stab.hpp"

namespace redcyc {

/// Exactly one holds for every X = (A 0 / C B):
///   cyclic    X cyclic
///   case_i    A non-cyclic
///   case_ii   A cyclic, B non-cyclic
///   case_iii  A and B cyclic, X non-cyclic
enum class CaseKind { cyclic, case_i, case_ii, case_iii };
const char* to_string(CaseKind c) noexcept;

CaseKind classify(const StabMat& s);

enum class Method { exact, monte_carlo };
const char* to_string(Method m) noexcept;

enum class Verdict { pass, fail, vacuous, not_applicable };
const char* to_string(Verdict v) noexcept;
Verdict parse_verdict(std::string_view s);

struct Verdicts {
    Verdict theorem_lower = Verdict::not_applicable;
    Verdict theorem_upper = Verdict::not_applicable;
    Verdict pi3_lower = Verdict::not_applicable;
    Verdict pi3_upper = Verdict::not_applicable;
    Verdict pi1_np = Verdict::not_applicable;
    Verdict pi2_np = Verdict::not_applicable;

    bool any_failure() const noexcept;
    bool operator==(const Verdicts&) const = default;
};

/// Point estimate with a Wilson score interval.
struct Estimate {
    double value = 0;
    double lower = 0;
    double upper = 0;
};
Estimate wilson_interval(std::uint64_t successes, std::uint64_t trials, double ci_level);

struct DensityReport {
    unsigned n = 0, r = 0;
    FieldPtr field;
    Mode mode = Mode::algebra;
    Method method = Method::exact;

    /// |M(V)_U| or |GL(V)_U| (exact), or the number of trials (Monte Carlo).
    BigInt total;
    /// Non-cyclic counts per case (exact) or per-case hit counts (Monte Carlo).
    BigInt n1, n2, n3;

    // exact only
    std::optional<Rational> pi, pi1, pi2, pi3;
    // Monte Carlo only
    std::optional<Estimate> pi_est, pi1_est, pi2_est, pi3_est;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    double ci_level = 0;

    BoundsReport bounds;
    Verdicts verdict;

    BigInt non_cyclic() const { return n1 + n2 + n3; }
};

class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(const BigInt& required, const BigInt& budget);
    const BigInt& required() const noexcept { return required_; }

   private:
    BigInt required_;
};

struct RunOptions {
    /// Upper limit on matrices visited by exact enumeration.
    std::uint64_t budget = std::uint64_t{1} << 26;
    unsigned workers = 1;
};

/// Number of matrices enumerate_exact visits for (n, r, q).
BigInt enumeration_work(unsigned n, unsigned r, unsigned long q);

/// Exact case counts.  All r x r and (n-r) x (n-r) blocks are enumerated and
/// binned by cyclicity and characteristic polynomial.  Pairs with a
/// non-cyclic block are counted without visiting C.  For cyclic A and B the
/// count of C with X non-cyclic depends only on (c_A, c_B), since
/// conjugating by diag(P, Q) maps C to QCP^-1 bijectively; it is found by
/// running C over all q^(r(n-r)) values against diag(C(c_A), C(c_B)).
DensityReport enumerate_exact(unsigned n, unsigned r, const FieldPtr& f, Mode mode, const RunOptions& opts = {});

/// Seeded estimate; trial i uses Rng::stream(seed, i), so the result does not
/// depend on opts.workers.
DensityReport monte_carlo(unsigned n, unsigned r, const FieldPtr& f, Mode mode, std::uint64_t trials, std::uint64_t seed,
                          double ci_level = 0.99, const RunOptions& opts = {});

/// Compares the report against the bounds it carries.  Exact reports use
/// rational comparisons; Monte Carlo bounds fail only when the whole
/// interval lies on the wrong side.
Verdicts check_bounds(const DensityReport& report);

struct GridSpec {
    std::vector<unsigned> n_values;
    /// Empty means every r in 1..n-1.
    std::vector<unsigned> r_values;
    std::vector<std::string> q_values;
};

struct SweepPoint {
    unsigned n = 0, r = 0;
    std::string q;
    std::optional<DensityReport> report;
    std::string error;
    bool budget_exceeded = false;
};

struct SweepConfig {
    Mode mode = Mode::algebra;
    Method method = Method::exact;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    double ci_level = 0.99;
    RunOptions run;
};

/// One point per (n, r, q) in grid order; errors stay with their point.
/// `on_point` (optional) sees each point as soon as it is done.
std::vector<SweepPoint> sweep(const GridSpec& grid, const SweepConfig& cfg,
                              const std::function<void(const SweepPoint&)>& on_point = {});

}  // namespace redcyc

#endif
