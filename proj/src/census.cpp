#include "redcyc/census.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>
#include <type_traits>

namespace redcyc {

const char* to_string(CaseKind c) noexcept {
    switch (c) {
        case CaseKind::cyclic: return "cyclic";
        case CaseKind::case_i: return "case_i";
        case CaseKind::case_ii: return "case_ii";
        case CaseKind::case_iii: return "case_iii";
    }
    return "?";
}

const char* to_string(Method m) noexcept { return m == Method::exact ? "exact" : "monte_carlo"; }

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::vacuous: return "vacuous";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

Verdict parse_verdict(std::string_view s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "vacuous") return Verdict::vacuous;
    if (s == "not_applicable") return Verdict::not_applicable;
    throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

bool Verdicts::any_failure() const noexcept {
    for (Verdict v : {theorem_lower, theorem_upper, pi3_lower, pi3_upper, pi1_np, pi2_np})
        if (v == Verdict::fail) return true;
    return false;
}

CaseKind classify(const StabMat& s) {
    if (is_cyclic(stab_embed(s))) return CaseKind::cyclic;
    if (!is_cyclic(s.A)) return CaseKind::case_i;
    if (!is_cyclic(s.B)) return CaseKind::case_ii;
    return CaseKind::case_iii;
}

Estimate wilson_interval(std::uint64_t successes, std::uint64_t trials, double ci_level) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: no trials");
    if (!(ci_level > 0 && ci_level < 1)) throw std::invalid_argument("wilson_interval: confidence level must be in (0, 1)");
    const boost::math::normal_distribution<double> normal;
    const double z = boost::math::quantile(normal, 1 - (1 - ci_level) / 2);
    const double nt = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nt;
    const double z2 = z * z;
    const double denom = 1 + z2 / nt;
    const double center = (p + z2 / (2 * nt)) / denom;
    const double half = z / denom * std::sqrt(p * (1 - p) / nt + z2 / (4 * nt * nt));
    const double lower = successes == 0 ? 0.0 : std::max(0.0, center - half);
    const double upper = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {p, lower, upper};
}

BudgetExceeded::BudgetExceeded(const BigInt& required, const BigInt& budget)
    : std::runtime_error("exact enumeration needs " + required.get_str() + " matrix visits, budget is " + budget.get_str()),
      required_(required) {}

namespace {

void require_instance(unsigned n, unsigned r) {
    if (r == 0 || r >= n) throw std::invalid_argument("need 0 < r < n (got n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
}

// Runs fn(worker, lo, hi) over [0, count) split into contiguous chunks.
template <class Fn>
void parallel_ranges(std::uint64_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || count < 2ull * workers) {
        fn(0u, std::uint64_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = count * w / workers, hi = count * (w + 1) / workers;
        pool.emplace_back([&fn, &errors, w, lo, hi] {
            try {
                fn(w, lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::uint64_t upow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Cyclicity census of all m x m matrices over one field.
struct BlockCensus {
    std::vector<std::uint64_t> cyclic_by_charpoly;  // indexed by monic_index of c_X
    std::uint64_t non_cyclic = 0;
    std::uint64_t non_cyclic_invertible = 0;

    std::uint64_t cyclic_total(Mode mode, std::uint32_t q) const {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < cyclic_by_charpoly.size(); ++i)
            if (mode == Mode::algebra || i % q != 0) s += cyclic_by_charpoly[i];
        return s;
    }
    std::uint64_t non_cyclic_count(Mode mode) const { return mode == Mode::algebra ? non_cyclic : non_cyclic_invertible; }
    // Cyclic matrices with char poly index idx that belong to the mode's set;
    // a cyclic matrix is invertible iff c_X(0) != 0.
    std::uint64_t weight(std::size_t idx, Mode mode, std::uint32_t q) const {
        if (mode == Mode::group && idx % q == 0) return 0;
        return cyclic_by_charpoly[idx];
    }
};

BlockCensus compute_block_census(std::size_t m, const FieldPtr& f, unsigned workers) {
    const std::uint32_t q = f->q();
    const std::uint64_t total = upow(q, static_cast<unsigned>(m * m));
    const std::uint64_t classes = upow(q, static_cast<unsigned>(m));
    std::vector<BlockCensus> partial(std::max(1u, workers));
    parallel_ranges(total, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        BlockCensus& out = partial[w];
        out.cyclic_by_charpoly.assign(classes, 0);
        CyclicKernel kernel(f, m);
        Mat x(f, m, m);
        auto& e = x.entries();
        std::uint64_t idx = lo;
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = static_cast<Elem>(idx % q);
            idx /= q;
        }
        for (std::uint64_t k = lo; k < hi; ++k) {
            auto res = kernel.test(e);
            if (res.cyclic) {
                ++out.cyclic_by_charpoly[res.charpoly_index];
            } else {
                ++out.non_cyclic;
                if (det(x) != 0) ++out.non_cyclic_invertible;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (++e[i] < q) break;
                e[i] = 0;
            }
        }
    });
    BlockCensus merged;
    merged.cyclic_by_charpoly.assign(classes, 0);
    for (const auto& p : partial) {
        if (p.cyclic_by_charpoly.empty()) continue;
        for (std::size_t i = 0; i < classes; ++i) merged.cyclic_by_charpoly[i] += p.cyclic_by_charpoly[i];
        merged.non_cyclic += p.non_cyclic;
        merged.non_cyclic_invertible += p.non_cyclic_invertible;
    }
    return merged;
}

// Block censuses depend only on (m, field); a sweep reuses them across (n, r).
const BlockCensus& block_census(std::size_t m, const FieldPtr& f, unsigned workers) {
    using Key = std::tuple<std::size_t, std::uint32_t, unsigned, std::vector<std::uint32_t>>;
    static std::mutex mu;
    static std::map<Key, BlockCensus> cache;
    Key key{m, f->p(), f->k(), f->modulus()};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    BlockCensus c = compute_block_census(m, f, workers);
    std::lock_guard lock(mu);
    return cache.emplace(std::move(key), std::move(c)).first->second;
}

// Number of C in F^((n-r) x r) with (C(a) 0 / C C(b)) non-cyclic.
std::uint64_t count_noncyclic_extensions(const Mat& ca, const Mat& cb, CyclicKernel& kernel, std::vector<Elem>& x) {
    const std::size_t r = ca.dim(), s = cb.dim(), n = r + s;
    const std::uint32_t q = ca.field()->q();
    std::fill(x.begin(), x.end(), 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) x[i * n + j] = ca(i, j);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) x[(r + i) * n + r + j] = cb(i, j);
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < r; ++j) slots.push_back((r + i) * n + j);
    const std::uint64_t count = upow(q, static_cast<unsigned>(slots.size()));
    std::uint64_t non_cyclic = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
        if (!kernel.test(x).cyclic) ++non_cyclic;
        for (std::size_t slot : slots) {
            if (++x[slot] < q) break;
            x[slot] = 0;
        }
    }
    return non_cyclic;
}

}  // namespace

BigInt enumeration_work(unsigned n, unsigned r, unsigned long q) {
    require_instance(n, r);
    return ipow(BigInt(q), r * r) + ipow(BigInt(q), (n - r) * (n - r)) + ipow(BigInt(q), n + r * (n - r));
}

DensityReport enumerate_exact(unsigned n, unsigned r, const FieldPtr& f, Mode mode, const RunOptions& opts) {
    require_instance(n, r);
    const std::uint32_t q = f->q();
    const BigInt work = enumeration_work(n, r, q);
    if (work > BigInt(std::to_string(opts.budget))) throw BudgetExceeded(work, BigInt(std::to_string(opts.budget)));

    const BlockCensus& ca = block_census(r, f, opts.workers);
    const BlockCensus& cb = block_census(n - r, f, opts.workers);
    const BigInt c_choices = ipow(BigInt(q), r * (n - r));

    const BigInt cyc_a(std::to_string(ca.cyclic_total(mode, q)));
    const BigInt non_a(std::to_string(ca.non_cyclic_count(mode)));
    const BigInt cyc_b(std::to_string(cb.cyclic_total(mode, q)));
    const BigInt non_b(std::to_string(cb.non_cyclic_count(mode)));

    DensityReport rep;
    rep.n = n;
    rep.r = r;
    rep.field = f;
    rep.mode = mode;
    rep.method = Method::exact;
    rep.bounds = bounds_report(n, r, q);
    rep.total = (cyc_a + non_a) * (cyc_b + non_b) * c_choices;
    const BigInt& expected = mode == Mode::algebra ? rep.bounds.orders.stabilizer_algebra : rep.bounds.orders.stabilizer_group;
    if (rep.total != expected) throw std::logic_error("enumerate_exact: block census does not add up to the stabilizer order");

    rep.n1 = non_a * (cyc_b + non_b) * c_choices;
    rep.n2 = cyc_a * non_b * c_choices;

    const std::uint64_t classes_a = upow(q, r), classes_b = upow(q, n - r);
    std::vector<BigInt> partial(std::max(1u, opts.workers), BigInt(0));
    parallel_ranges(classes_a * classes_b, opts.workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        CyclicKernel kernel(f, n);
        std::vector<Elem> x(static_cast<std::size_t>(n) * n);
        for (std::uint64_t k = lo; k < hi; ++k) {
            const std::uint64_t ia = k / classes_b, ib = k % classes_b;
            const std::uint64_t wa = ca.weight(ia, mode, q), wb = cb.weight(ib, mode, q);
            if (wa == 0 || wb == 0) continue;
            const Mat comp_a = companion(Poly::monic_from_index(f, r, ia));
            const Mat comp_b = companion(Poly::monic_from_index(f, n - r, ib));
            const std::uint64_t bad = count_noncyclic_extensions(comp_a, comp_b, kernel, x);
            partial[w] += BigInt(std::to_string(wa)) * BigInt(std::to_string(wb)) * BigInt(std::to_string(bad));
        }
    });
    rep.n3 = 0;
    for (const auto& p : partial) rep.n3 += p;

    rep.pi = make_rational(rep.non_cyclic(), rep.total);
    rep.pi1 = make_rational(rep.n1, rep.total);
    rep.pi2 = make_rational(rep.n2, rep.total);
    rep.pi3 = make_rational(rep.n3, rep.total);
    rep.verdict = check_bounds(rep);
    return rep;
}

DensityReport monte_carlo(unsigned n, unsigned r, const FieldPtr& f, Mode mode, std::uint64_t trials, std::uint64_t seed,
                          double ci_level, const RunOptions& opts) {
    require_instance(n, r);
    if (trials == 0) throw std::invalid_argument("monte_carlo: need at least one trial");
    if (!(ci_level > 0 && ci_level < 1)) throw std::invalid_argument("monte_carlo: confidence level must be in (0, 1)");

    struct Tally {
        std::uint64_t n1 = 0, n2 = 0, n3 = 0;
    };
    std::vector<Tally> partial(std::max(1u, opts.workers));
    parallel_ranges(trials, opts.workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        CyclicKernel kx(f, n), ka(f, r), kb(f, n - r);
        Tally& t = partial[w];
        for (std::uint64_t i = lo; i < hi; ++i) {
            Rng rng = Rng::stream(seed, i);
            const StabMat s = stab_sample(n, r, f, rng, mode);
            if (kx.test(stab_embed(s)).cyclic) continue;
            if (!ka.test(s.A).cyclic)
                ++t.n1;
            else if (!kb.test(s.B).cyclic)
                ++t.n2;
            else
                ++t.n3;
        }
    });
    Tally sum;
    for (const auto& t : partial) {
        sum.n1 += t.n1;
        sum.n2 += t.n2;
        sum.n3 += t.n3;
    }

    DensityReport rep;
    rep.n = n;
    rep.r = r;
    rep.field = f;
    rep.mode = mode;
    rep.method = Method::monte_carlo;
    rep.bounds = bounds_report(n, r, f->q());
    rep.total = BigInt(std::to_string(trials));
    rep.n1 = BigInt(std::to_string(sum.n1));
    rep.n2 = BigInt(std::to_string(sum.n2));
    rep.n3 = BigInt(std::to_string(sum.n3));
    rep.seed = seed;
    rep.trials = trials;
    rep.ci_level = ci_level;
    rep.pi_est = wilson_interval(sum.n1 + sum.n2 + sum.n3, trials, ci_level);
    rep.pi1_est = wilson_interval(sum.n1, trials, ci_level);
    rep.pi2_est = wilson_interval(sum.n2, trials, ci_level);
    rep.pi3_est = wilson_interval(sum.n3, trials, ci_level);
    rep.verdict = check_bounds(rep);
    return rep;
}

namespace {

Verdict both(Verdict a, Verdict b) { return (a == Verdict::fail || b == Verdict::fail) ? Verdict::fail : Verdict::pass; }

Verdict pass_if(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

Verdict at_least(const Rational& bound, const Rational& x, bool strict = false) { return pass_if(strict ? x > bound : x >= bound); }
Verdict at_most(const Rational& bound, const Rational& x, bool strict = false) { return pass_if(strict ? x < bound : x <= bound); }
// An interval fails a bound only when it lies wholly on the wrong side.
Verdict at_least(const Rational& bound, const Estimate& e) { return pass_if(e.upper >= bound.get_d()); }
Verdict at_most(const Rational& bound, const Estimate& e) { return pass_if(e.lower <= bound.get_d()); }

template <class V>
Verdict within(const Rational& lo, const Rational& hi, const V& x) {
    if constexpr (std::is_same_v<V, Rational>)
        return both(at_least(lo, x, true), at_most(hi, x, true));
    else
        return both(at_least(lo, x), at_most(hi, x));
}


}  // namespace

namespace {

template <class V>
Verdicts check_values(const DensityReport& rep, const V& pi, const V& pi1, const V& pi2, const V& pi3) {
    Verdicts v;
    const BoundsReport& b = rep.bounds;
    if (rep.mode == Mode::group) {
        // GL(V)_U sits inside M(V)_U, so the non-cyclic count bound rescales
        // by |M(V)_U| / |GL(V)_U|.
        const Rational upper = b.theorem_upper * Rational(b.orders.stabilizer_algebra) / Rational(b.orders.stabilizer_group);
        v.theorem_upper = upper >= 1 ? Verdict::vacuous : at_most(upper, pi);
        return v;
    }
    v.theorem_lower = at_least(b.theorem_lower, pi);
    v.theorem_upper = b.theorem_upper_vacuous ? Verdict::vacuous : at_most(b.theorem_upper, pi);
    v.pi3_lower = at_least(b.pi3_lower, pi3);
    v.pi3_upper = at_most(b.pi3_upper, pi3);
    // pi_1 = P(A non-cyclic) and pi_2 = P(A cyclic) P(B non-cyclic); a 1x1 block is always cyclic.
    v.pi1_np = rep.r == 1 ? pass_if(rep.n1 == 0) : within(b.np_lower, b.np_upper, pi1);
    if (rep.n - rep.r == 1) {
        v.pi2_np = pass_if(rep.n2 == 0);
    } else if constexpr (std::is_same_v<V, Rational>) {
        const Rational keep = 1 - pi1;
        v.pi2_np = within(keep * b.np_lower, keep * b.np_upper, pi2);
    } else {
        v.pi2_np = within(Rational(1 - pi1.upper) * b.np_lower, Rational(1 - pi1.lower) * b.np_upper, pi2);
    }
    return v;
}

}  // namespace

Verdicts check_bounds(const DensityReport& rep) {
    if (rep.method == Method::exact) {
        if (!rep.pi || !rep.pi1 || !rep.pi2 || !rep.pi3) throw std::invalid_argument("check_bounds: exact report without values");
        return check_values(rep, *rep.pi, *rep.pi1, *rep.pi2, *rep.pi3);
    }
    if (!rep.pi_est || !rep.pi1_est || !rep.pi2_est || !rep.pi3_est) throw std::invalid_argument("check_bounds: report without estimates");
    return check_values(rep, *rep.pi_est, *rep.pi1_est, *rep.pi2_est, *rep.pi3_est);
}

std::vector<SweepPoint> sweep(const GridSpec& grid, const SweepConfig& cfg, const std::function<void(const SweepPoint&)>& on_point) {
    std::vector<SweepPoint> out;
    for (unsigned n : grid.n_values) {
        std::vector<unsigned> rs = grid.r_values;
        if (rs.empty())
            for (unsigned r = 1; r < n; ++r) rs.push_back(r);
        for (unsigned r : rs) {
            for (const std::string& q : grid.q_values) {
                SweepPoint pt;
                pt.n = n;
                pt.r = r;
                pt.q = q;
                try {
                    const FieldPtr f = Field::parse(q);
                    if (cfg.method == Method::exact)
                        pt.report = enumerate_exact(n, r, f, cfg.mode, cfg.run);
                    else
                        pt.report = monte_carlo(n, r, f, cfg.mode, cfg.trials, cfg.seed, cfg.ci_level, cfg.run);
                } catch (const BudgetExceeded& e) {
                    pt.error = e.what();
                    pt.budget_exceeded = true;
                } catch (const std::exception& e) {
                    pt.error = e.what();
                }
                if (on_point) on_point(pt);
                out.push_back(std::move(pt));
            }
        }
    }
    return out;
}

}  // namespace redcyc
