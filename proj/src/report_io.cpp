#include "redcyc/report_io.hpp"

#include <stdexcept>

namespace redcyc {

namespace {

std::string big(const BigInt& x) { return x.get_str(); }
BigInt big_from(const Json& j) { return BigInt(j.get<std::string>()); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Exact decimal of a double, at 12 significant digits.
std::string decimal(double x) { return decimal_string(Rational(x), 12); }

Json estimate_json(const Estimate& e) { return Json{{"estimate", e.value}, {"lower", e.lower}, {"upper", e.upper}}; }
Estimate estimate_from_json(const Json& j) {
    return {j.at("estimate").get<double>(), j.at("lower").get<double>(), j.at("upper").get<double>()};
}

std::string verdict_text(const Verdicts& v) {
    const std::pair<const char*, Verdict> items[] = {
        {"theorem_lower", v.theorem_lower}, {"theorem_upper", v.theorem_upper}, {"pi3_lower", v.pi3_lower},
        {"pi3_upper", v.pi3_upper},         {"pi1_np", v.pi1_np},               {"pi2_np", v.pi2_np}};
    std::string out;
    for (const auto& [name, value] : items) {
        if (!out.empty()) out += ';';
        out += std::string(name) + "=" + to_string(value);
    }
    return out;
}

Method parse_method(const std::string& s) {
    if (s == "exact") return Method::exact;
    if (s == "monte_carlo") return Method::monte_carlo;
    throw std::invalid_argument("unknown method '" + s + "'");
}

}  // namespace

Json rational_json(const Rational& x) { return Json{{"exact", fraction_string(x)}, {"decimal", std::stod(decimal_string(x, 12))}}; }

Rational rational_from_json(const Json& j) { return parse_fraction(j.at("exact").get<std::string>()); }

Json field_json(const Field& f) {
    Json j{{"q", f.q()}, {"p", f.p()}, {"k", f.k()}};
    if (!f.is_prime()) j["modulus"] = f.modulus_text();
    return j;
}

FieldPtr field_from_json(const Json& j) {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto k = j.at("k").get<unsigned>();
    if (k == 1) return Field::make(p);
    const Poly m = Poly::parse(Field::make(p), j.at("modulus").get<std::string>());
    return Field::make(p, k, std::vector<std::uint32_t>(m.coeffs().begin(), m.coeffs().end()));
}

Json to_json(const BoundsReport& b) {
    return Json{{"n", b.n},
                {"r", b.r},
                {"q", b.q},
                {"theorem_lower", rational_json(b.theorem_lower)},
                {"theorem_upper", rational_json(b.theorem_upper)},
                {"theorem_upper_vacuous", b.theorem_upper_vacuous},
                {"pi3_lower", rational_json(b.pi3_lower)},
                {"pi3_lower_uniform", rational_json(b.pi3_lower_uniform)},
                {"pi3_upper", rational_json(b.pi3_upper)},
                {"pi3_upper_closed", rational_json(b.pi3_upper_closed)},
                {"np_lower", rational_json(b.np_lower)},
                {"np_upper", rational_json(b.np_upper)},
                {"orders",
                 {{"stabilizer_algebra", big(b.orders.stabilizer_algebra)},
                  {"stabilizer_group", big(b.orders.stabilizer_group)},
                  {"general_linear", big(b.orders.general_linear)}}}};
}

BoundsReport bounds_from_json(const Json& j) {
    BoundsReport b;
    b.n = j.at("n").get<unsigned>();
    b.r = j.at("r").get<unsigned>();
    b.q = j.at("q").get<unsigned long>();
    b.theorem_lower = rational_from_json(j.at("theorem_lower"));
    b.theorem_upper = rational_from_json(j.at("theorem_upper"));
    b.theorem_upper_vacuous = j.at("theorem_upper_vacuous").get<bool>();
    b.pi3_lower = rational_from_json(j.at("pi3_lower"));
    b.pi3_lower_uniform = rational_from_json(j.at("pi3_lower_uniform"));
    b.pi3_upper = rational_from_json(j.at("pi3_upper"));
    b.pi3_upper_closed = rational_from_json(j.at("pi3_upper_closed"));
    b.np_lower = rational_from_json(j.at("np_lower"));
    b.np_upper = rational_from_json(j.at("np_upper"));
    const Json& o = j.at("orders");
    b.orders.stabilizer_algebra = big_from(o.at("stabilizer_algebra"));
    b.orders.stabilizer_group = big_from(o.at("stabilizer_group"));
    b.orders.general_linear = big_from(o.at("general_linear"));
    return b;
}

Json to_json(const Verdicts& v) {
    return Json{{"theorem_lower", to_string(v.theorem_lower)}, {"theorem_upper", to_string(v.theorem_upper)},
                {"pi3_lower", to_string(v.pi3_lower)},         {"pi3_upper", to_string(v.pi3_upper)},
                {"pi1_np", to_string(v.pi1_np)},               {"pi2_np", to_string(v.pi2_np)}};
}

Verdicts verdicts_from_json(const Json& j) {
    Verdicts v;
    v.theorem_lower = parse_verdict(j.at("theorem_lower").get<std::string>());
    v.theorem_upper = parse_verdict(j.at("theorem_upper").get<std::string>());
    v.pi3_lower = parse_verdict(j.at("pi3_lower").get<std::string>());
    v.pi3_upper = parse_verdict(j.at("pi3_upper").get<std::string>());
    v.pi1_np = parse_verdict(j.at("pi1_np").get<std::string>());
    v.pi2_np = parse_verdict(j.at("pi2_np").get<std::string>());
    return v;
}

Json to_json(const DensityReport& r) {
    Json j{{"n", r.n}, {"r", r.r}, {"field", field_json(*r.field)}, {"mode", to_string(r.mode)}, {"method", to_string(r.method)},
           {"total", big(r.total)}, {"n1", big(r.n1)},  {"n2", big(r.n2)},  {"n3", big(r.n3)}};
    if (r.method == Method::exact) {
        j["pi"] = rational_json(*r.pi);
        j["pi1"] = rational_json(*r.pi1);
        j["pi2"] = rational_json(*r.pi2);
        j["pi3"] = rational_json(*r.pi3);
    } else {
        j["pi"] = estimate_json(*r.pi_est);
        j["pi1"] = estimate_json(*r.pi1_est);
        j["pi2"] = estimate_json(*r.pi2_est);
        j["pi3"] = estimate_json(*r.pi3_est);
        j["seed"] = r.seed;
        j["trials"] = r.trials;
        j["ci_level"] = r.ci_level;
    }
    j["bounds"] = to_json(r.bounds);
    j["verdict"] = to_json(r.verdict);
    return j;
}

DensityReport report_from_json(const Json& j) {
    DensityReport r;
    r.n = j.at("n").get<unsigned>();
    r.r = j.at("r").get<unsigned>();
    r.field = field_from_json(j.at("field"));
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.method = parse_method(j.at("method").get<std::string>());
    r.total = big_from(j.at("total"));
    r.n1 = big_from(j.at("n1"));
    r.n2 = big_from(j.at("n2"));
    r.n3 = big_from(j.at("n3"));
    if (r.method == Method::exact) {
        r.pi = rational_from_json(j.at("pi"));
        r.pi1 = rational_from_json(j.at("pi1"));
        r.pi2 = rational_from_json(j.at("pi2"));
        r.pi3 = rational_from_json(j.at("pi3"));
    } else {
        r.pi_est = estimate_from_json(j.at("pi"));
        r.pi1_est = estimate_from_json(j.at("pi1"));
        r.pi2_est = estimate_from_json(j.at("pi2"));
        r.pi3_est = estimate_from_json(j.at("pi3"));
        r.seed = j.at("seed").get<std::uint64_t>();
        r.trials = j.at("trials").get<std::uint64_t>();
        r.ci_level = j.at("ci_level").get<double>();
    }
    r.bounds = bounds_from_json(j.at("bounds"));
    r.verdict = verdicts_from_json(j.at("verdict"));
    return r;
}

Json to_json(const SweepPoint& p) {
    Json j{{"n", p.n}, {"r", p.r}, {"q", p.q}};
    if (p.report) {
        j["report"] = to_json(*p.report);
    } else {
        j["error"] = p.error;
        j["budget_exceeded"] = p.budget_exceeded;
    }
    return j;
}

Json to_json(const ProbeReport& p) {
    Json j{{"verdict", to_string(p.verdict)}, {"tries_used", p.tries_used}, {"seed", p.seed}};
    if (p.witness) {
        j["witness"] = {{"dim", p.witness->dim()}, {"basis", p.witness->basis_matrix().to_string()}};
    }
    if (p.pair) {
        const Field& f = *p.pair->second.field();
        std::string v;
        for (Elem e : p.pair->first) v += (v.empty() ? "" : ",") + f.format(e);
        j["pair"] = {{"v", v}, {"X", p.pair->second.to_string()}};
    }
    return j;
}

std::string csv_header() { return "n,r,q,mode,method,pi,pi1,pi2,pi3,lower,upper,verdicts,seed,trials"; }

std::string csv_row(const DensityReport& r) {
    std::string row = std::to_string(r.n) + "," + std::to_string(r.r) + "," + csv_field(r.field->order_text()) + "," +
                      to_string(r.mode) + "," + to_string(r.method) + ",";
    if (r.method == Method::exact) {
        for (const auto* x : {&r.pi, &r.pi1, &r.pi2, &r.pi3}) row += fraction_string(**x) + ",";
    } else {
        for (const auto* x : {&r.pi_est, &r.pi1_est, &r.pi2_est, &r.pi3_est}) row += decimal((*x)->value) + ",";
    }
    row += fraction_string(r.bounds.theorem_lower) + "," + fraction_string(r.bounds.theorem_upper) + ",";
    row += verdict_text(r.verdict) + ",";
    if (r.method == Method::monte_carlo) row += std::to_string(r.seed) + "," + std::to_string(r.trials);
    else row += ",";
    return row;
}

std::string csv_row(const SweepPoint& p) {
    if (p.report) return csv_row(*p.report);
    return std::to_string(p.n) + "," + std::to_string(p.r) + "," + csv_field(p.q) + ",,,,,,,,," +
           csv_field((p.budget_exceeded ? "budget_exceeded: " : "error: ") + p.error) + ",,";
}

}  // namespace redcyc
