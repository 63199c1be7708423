#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "redcyc/census.hpp"
#include "redcyc/counting.hpp"
#include "redcyc/cyclictest.hpp"
#include "redcyc/report_io.hpp"

using namespace redcyc;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kBoundFailure = 2;
constexpr int kBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "json";
    std::string output;
    unsigned workers = 1;
};

class Sink {
   public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

   private:
    std::ofstream file_;
};

void emit_json(const Common& c, const Json& j) {
    Sink s(c.output);
    s.out() << j.dump(2) << '\n';
}

void emit_lines(const Common& c, const std::vector<std::string>& lines) {
    Sink s(c.output);
    for (const auto& l : lines) s.out() << l << '\n';
}

std::vector<unsigned> parse_int_list(const std::string& text, const char* what) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || v > 64) throw UsageError(std::string("bad ") + what + " value '" + s + "'");
        return static_cast<unsigned>(v);
    };
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (auto dots = item.find(".."); dots != std::string::npos) {
            const unsigned lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
            if (lo > hi) throw UsageError(std::string("empty ") + what + " range '" + item + "'");
            for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(number(item));
        }
    }
    return out;
}

std::vector<std::string> parse_q_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

FieldPtr field_arg(const std::string& q) {
    try {
        return Field::parse(q);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

Mode mode_arg(const std::string& m) {
    try {
        return parse_mode(m);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

void check_instance(unsigned n, unsigned r) {
    if (n < 2) throw UsageError("need n >= 2");
    if (r < 1 || r >= n) throw UsageError("need 0 < r < n");
}

int report_exit(const DensityReport& r) { return r.verdict.any_failure() ? kBoundFailure : kOk; }

void emit_report(const Common& c, const DensityReport& r) {
    if (c.format == "csv")
        emit_lines(c, {csv_header(), csv_row(r)});
    else
        emit_json(c, to_json(r));
}

std::vector<std::pair<std::string, std::string>> bounds_rows(const BoundsReport& b) {
    return {{"theorem_lower", fraction_string(b.theorem_lower)},
            {"theorem_upper", fraction_string(b.theorem_upper)},
            {"pi3_lower", fraction_string(b.pi3_lower)},
            {"pi3_lower_uniform", fraction_string(b.pi3_lower_uniform)},
            {"pi3_upper", fraction_string(b.pi3_upper)},
            {"pi3_upper_closed", fraction_string(b.pi3_upper_closed)},
            {"np_lower", fraction_string(b.np_lower)},
            {"np_upper", fraction_string(b.np_upper)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Density of cyclic matrices in maximal reducible matrix algebras over finite fields"};
    app.require_subcommand(1);
    Common common;
    if (const char* env = std::getenv("REDCYC_WORKERS"); env && *env) {
        const std::string text(env);
        unsigned v = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || end != text.data() + text.size() || v < 1 || v > 256) {
            std::cerr << "REDCYC_WORKERS must be an integer in 1..256 (got '" << text << "')\n";
            return kUsage;
        }
        common.workers = v;
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output,-o", common.output, "write to this file instead of stdout");
        sub->add_option("--workers", common.workers, "worker threads (default: $REDCYC_WORKERS, else 1)")->check(CLI::Range(1u, 256u));
    };

    unsigned n = 0, r = 0;
    std::string q = "2", mode = "algebra", method = "exact";
    std::uint64_t trials = 100000, seed = 1, budget = RunOptions{}.budget;
    double ci_level = 0.99;

    auto* bounds = app.add_subcommand("bounds", "evaluate every bound for (n, r, q)");
    bounds->add_option("--n", n)->required();
    bounds->add_option("--r", r)->required();
    bounds->add_option("--q", q)->required();
    add_common(bounds);

    auto* enumerate = app.add_subcommand("enumerate", "exact enumeration of M(V)_U or GL(V)_U");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--r", r)->required();
    enumerate->add_option("--q", q)->required();
    enumerate->add_option("--mode", mode, "algebra or group");
    enumerate->add_option("--budget", budget, "maximum matrix visits");
    add_common(enumerate);

    auto* estimate = app.add_subcommand("estimate", "seeded Monte Carlo estimate");
    estimate->add_option("--n", n)->required();
    estimate->add_option("--r", r)->required();
    estimate->add_option("--q", q)->required();
    estimate->add_option("--mode", mode, "algebra or group");
    estimate->add_option("--trials", trials)->check(CLI::PositiveNumber);
    estimate->add_option("--seed", seed);
    estimate->add_option("--ci-level", ci_level)->check(CLI::Range(0.0, 1.0));
    add_common(estimate);

    std::string n_list, r_list, q_list;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a grid of (n, r, q)");
    sweep_cmd->add_option("--n", n_list, "e.g. 2..5 or 2,4,6")->required();
    sweep_cmd->add_option("--r", r_list, "default: every 0 < r < n");
    sweep_cmd->add_option("--q", q_list, "e.g. 2,3,2^2")->required();
    sweep_cmd->add_option("--method", method, "exact or mc")->check(CLI::IsMember({"exact", "mc", "monte_carlo"}));
    sweep_cmd->add_option("--mode", mode, "algebra or group");
    sweep_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", seed);
    sweep_cmd->add_option("--ci-level", ci_level)->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--budget", budget, "maximum matrix visits per point");
    add_common(sweep_cmd);

    unsigned lr = 0, ls = 0;
    std::optional<unsigned> ld;
    auto* lemma = app.add_subcommand("lemma", "coprime pair counts: closed form, recurrence, brute force");
    lemma->add_option("--r", lr)->required();
    lemma->add_option("--s", ls)->required();
    lemma->add_option("--q", q)->required();
    lemma->add_option("--d", ld, "also check the lower bound for pairs avoiding each f in Irr(d, q)");
    add_common(lemma);

    std::string gen_file;
    std::uint64_t max_tries = 1000;
    std::size_t walk_length = 0;
    auto* probe_cmd = app.add_subcommand("probe", "search a generated algebra for a cyclic pair or invariant subspace");
    probe_cmd->add_option("--file", gen_file, "generator file")->required();
    probe_cmd->add_option("--max-tries", max_tries);
    probe_cmd->add_option("--seed", seed);
    probe_cmd->add_option("--walk-length", walk_length, "0 means 2n");
    add_common(probe_cmd);

    std::vector<unsigned> series_r;
    std::vector<std::string> series_q;
    auto* series = app.add_subcommand("series", "limiting cyclic proportions as dim V grows");
    series->add_option("--r", series_r, "dim U values (default 1..7)");
    series->add_option("--mode", mode, "algebra or group");
    series->add_option("--q", series_q, "evaluate at these q");
    add_common(series);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*bounds) {
            check_instance(n, r);
            const FieldPtr f = field_arg(q);
            const BoundsReport b = bounds_report(n, r, f->q());
            if (common.format == "csv") {
                std::vector<std::string> lines{"n,r,q,bound,exact,decimal,vacuous"};
                for (const auto& [name, exact] : bounds_rows(b)) {
                    const bool vac = name == "theorem_upper" && b.theorem_upper_vacuous;
                    lines.push_back(std::to_string(n) + "," + std::to_string(r) + "," + f->order_text() + "," + name + "," + exact + "," +
                                    decimal_string(parse_fraction(exact), 12) + "," + (vac ? "true" : "false"));
                }
                emit_lines(common, lines);
            } else {
                Json j = to_json(b);
                j["field"] = field_json(*f);
                emit_json(common, j);
            }
            return kOk;
        }

        if (*enumerate) {
            check_instance(n, r);
            const FieldPtr f = field_arg(q);
            const DensityReport rep = enumerate_exact(n, r, f, mode_arg(mode), {budget, common.workers});
            emit_report(common, rep);
            return report_exit(rep);
        }

        if (*estimate) {
            check_instance(n, r);
            const FieldPtr f = field_arg(q);
            const DensityReport rep = monte_carlo(n, r, f, mode_arg(mode), trials, seed, ci_level, {budget, common.workers});
            emit_report(common, rep);
            return report_exit(rep);
        }

        if (*sweep_cmd) {
            GridSpec grid;
            grid.n_values = parse_int_list(n_list, "n");
            const std::vector<unsigned> rs = r_list.empty() ? std::vector<unsigned>{} : parse_int_list(r_list, "r");
            grid.q_values = parse_q_list(q_list);
            if (grid.n_values.empty() || grid.q_values.empty()) throw UsageError("empty grid");
            for (const auto& qt : grid.q_values) field_arg(qt);
            for (unsigned nv : grid.n_values)
                if (nv < 2) throw UsageError("grid n values must be >= 2");
            SweepConfig cfg;
            cfg.mode = mode_arg(mode);
            cfg.method = method == "exact" ? Method::exact : Method::monte_carlo;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.ci_level = ci_level;
            cfg.run = {budget, common.workers};

            // explicit r values apply only where r < n
            std::vector<SweepPoint> points;
            for (unsigned nv : grid.n_values) {
                GridSpec one{{nv}, {}, grid.q_values};
                for (unsigned rv : rs)
                    if (rv >= 1 && rv < nv) one.r_values.push_back(rv);
                if (!rs.empty() && one.r_values.empty()) continue;
                auto part = sweep(one, cfg);
                points.insert(points.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
            }

            int code = kOk;
            bool failure = false, over_budget = false, other = false;
            for (const auto& p : points) {
                if (p.report) failure |= p.report->verdict.any_failure();
                else if (p.budget_exceeded) over_budget = true;
                else other = true;
            }
            if (failure) code = kBoundFailure;
            else if (over_budget) code = kBudget;
            else if (other) code = kUsage;

            if (common.format == "csv") {
                std::vector<std::string> lines{csv_header()};
                for (const auto& p : points) lines.push_back(csv_row(p));
                emit_lines(common, lines);
            } else {
                Json arr = Json::array();
                for (const auto& p : points) arr.push_back(to_json(p));
                emit_json(common, Json{{"points", arr}});
            }
            return code;
        }

        if (*lemma) {
            const FieldPtr f = field_arg(q);
            if (lr + ls > 12) throw UsageError("lemma: need r + s <= 12");
            const BigInt closed = coprime_count(lr, ls, f->q());
            const BigInt rec = coprime_count_recurrence(lr, ls, f->q());
            const BigInt brute = coprime_count_brute(lr, ls, f);
            bool ok = closed == rec && rec == brute;
            Json j{{"r", lr}, {"s", ls}, {"field", field_json(*f)},
                   {"closed_form", closed.get_str()}, {"recurrence", rec.get_str()}, {"brute_force", brute.get_str()}, {"agree", ok}};
            std::vector<std::string> lines{"r,s,q,d,f,closed_form,recurrence,brute_force,bound,count,holds",
                                           std::to_string(lr) + "," + std::to_string(ls) + "," + f->order_text() + ",,," +
                                               closed.get_str() + "," + rec.get_str() + "," + brute.get_str() + ",,," +
                                               (ok ? "true" : "false")};
            if (ld) {
                if (*ld < 1 || *ld > std::min(lr, ls)) throw UsageError("lemma: need 1 <= d <= min(r, s)");
                const BigInt bound = coprime_avoiding_lower(lr, ls, *ld, f->q());
                Json per_f = Json::array();
                for (const Poly& g : irr_enumerate(*ld, f)) {
                    const BigInt count = coprime_avoiding_brute(lr, ls, g);
                    const bool holds = bound <= count;
                    ok &= holds;
                    per_f.push_back({{"f", g.to_string()}, {"count", count.get_str()}, {"holds", holds}});
                    lines.push_back(std::to_string(lr) + "," + std::to_string(ls) + "," + f->order_text() + "," + std::to_string(*ld) + "," +
                                    g.to_string() + ",,,," + bound.get_str() + "," + count.get_str() + "," + (holds ? "true" : "false"));
                }
                j["d"] = *ld;
                j["lower_bound"] = bound.get_str();
                j["per_f"] = per_f;
            }
            if (common.format == "csv") emit_lines(common, lines);
            else emit_json(common, j);
            return ok ? kOk : kBoundFailure;
        }

        if (*probe_cmd) {
            std::ifstream in(gen_file);
            if (!in) throw UsageError("cannot open generator file '" + gen_file + "'");
            GeneratedAlgebra alg = [&] {
                try {
                    return parse_generators(in);
                } catch (const ParseError& e) {
                    throw UsageError(gen_file + ": " + e.what());
                }
            }();
            if (max_tries == 0) throw UsageError("need --max-tries >= 1");
            const ProbeReport rep = probe(alg, max_tries, seed, walk_length);
            Json j = to_json(rep);
            j["field"] = field_json(*alg.field());
            j["n"] = alg.n();
            if (common.format == "csv") {
                emit_lines(common, {"verdict,tries_used,seed,witness_dim",
                                    std::string(to_string(rep.verdict)) + "," + std::to_string(rep.tries_used) + "," +
                                        std::to_string(rep.seed) + "," + (rep.witness ? std::to_string(rep.witness->dim()) : "")});
            } else {
                emit_json(common, j);
            }
            return kOk;
        }

        if (*series) {
            const Mode m = mode_arg(mode);
            if (series_r.empty()) series_r = {1, 2, 3, 4, 5, 6, 7};
            std::vector<FieldPtr> fields;
            for (const auto& qt : series_q) fields.push_back(field_arg(qt));
            Json rows = Json::array();
            std::vector<std::string> lines{"r,mode,coefficients,q,cyclic,non_cyclic"};
            for (unsigned rv : series_r) {
                if (rv < 1 || rv > 7) throw UsageError("series: r must be in 1..7");
                const TableSeries t = table_series(rv, m);
                std::string coeff_text;
                for (int c : t.coeffs) coeff_text += (coeff_text.empty() ? "" : " ") + std::to_string(c);
                Json row{{"r", rv}, {"mode", to_string(m)}, {"coefficients", t.coeffs}, {"truncation_order", TableSeries::truncation_order}};
                Json evals = Json::array();
                for (const auto& f : fields) {
                    const Rational v = t.evaluate(f->q());
                    evals.push_back({{"q", f->q()}, {"cyclic", rational_json(v)}, {"non_cyclic", rational_json(1 - v)}});
                    lines.push_back(std::to_string(rv) + "," + to_string(m) + "," + coeff_text + "," + f->order_text() + "," +
                                    decimal_string(v, 12) + "," + decimal_string(1 - v, 12));
                }
                if (fields.empty()) lines.push_back(std::to_string(rv) + "," + to_string(m) + "," + coeff_text + ",,,");
                row["evaluations"] = evals;
                rows.push_back(row);
            }
            if (common.format == "csv") emit_lines(common, lines);
            else emit_json(common, Json{{"series", rows}});
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
