#include "redcyc/cyclictest.hpp"

#include <sstream>

namespace redcyc {

GeneratedAlgebra::GeneratedAlgebra(std::vector<Mat> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("an algebra needs at least one generator");
    n_ = gens_.front().rows();
    for (const Mat& g : gens_) {
        if (!g.is_square() || g.rows() != n_) throw DimensionError("generators must all be " + std::to_string(n_) + "x" + std::to_string(n_));
        require_same_field(*g.field(), *gens_.front().field());
    }
}

GeneratedAlgebra GeneratedAlgebra::full(const FieldPtr& f, std::size_t n) { return stabilizer(f, n, 0); }

GeneratedAlgebra GeneratedAlgebra::stabilizer(const FieldPtr& f, std::size_t n, std::size_t r) {
    if (n == 0 || r >= n) throw std::invalid_argument("need 0 <= r < n");
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i < r && j >= r) continue;
            Mat e(f, n, n);
            e.set(i, j, 1);
            gens.push_back(std::move(e));
        }
    return GeneratedAlgebra(std::move(gens));
}

Mat random_element(const GeneratedAlgebra& alg, Rng& rng, std::size_t length) {
    if (length == 0) length = 2 * alg.n();
    const auto& gens = alg.generators();
    Mat x = gens[rng.below(gens.size())];
    for (std::size_t step = 1; step < length; ++step) {
        const bool multiply = rng.below(2) == 0;
        const Mat& g = gens[rng.below(gens.size())];
        x = multiply ? x * g : x + g;
    }
    return x;
}

Subspace spin(std::span<const Elem> v, const GeneratedAlgebra& alg) {
    if (v.size() != alg.n()) throw DimensionError("spin: vector length must equal n");
    const Field& f = *alg.field();
    Subspace w(alg.field(), alg.n());
    std::vector<Vec> queue;
    if (w.insert(Vec(v.begin(), v.end()))) queue.emplace_back(v.begin(), v.end());
    for (std::size_t i = 0; i < queue.size() && w.dim() < alg.n(); ++i)
        for (const Mat& g : alg.generators()) {
            Vec u = vec_mul(queue[i], g, f);
            if (w.insert(u)) queue.push_back(std::move(u));
        }
    return w;
}

const char* to_string(ProbeVerdict v) noexcept {
    switch (v) {
        case ProbeVerdict::reducible_with_witness: return "reducible_with_witness";
        case ProbeVerdict::cyclic_pair_found: return "cyclic_pair_found";
        case ProbeVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::optional<Vec> find_cyclic_vector(const Mat& x) {
    const std::size_t n = x.dim();
    const FieldPtr& f = x.field();
    auto spans = [&](const Vec& v) { return krylov_span(v, x).dim() == n; };
    for (std::size_t i = 0; i < n; ++i)
        if (Vec e = unit_vector(n, i); spans(e)) return e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec e = unit_vector(n, i);
            e[j] = 1;
            if (spans(e)) return e;
        }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n && total <= Field::kMaxOrder; ++i) total *= f->q();
    if (total > Field::kMaxOrder) return std::nullopt;
    Vec v(n, 0);
    for (std::uint64_t k = 0; k < total; ++k) {
        if (spans(v)) return v;
        for (std::size_t i = 0; i < n; ++i) {
            if (++v[i] < f->q()) break;
            v[i] = 0;
        }
    }
    return std::nullopt;
}

namespace {

// Irreducible factors of m of degree 1 and 2.  Quadratic factors are split
// out by trial division for q <= 256; above that their product is returned
// as a single entry.
std::vector<Poly> low_degree_factors(const Poly& m) {
    const FieldPtr& f = m.field();
    const std::uint64_t q = f->q();
    const Poly t = Poly::monomial(f, 1);
    std::vector<Poly> out;

    const Poly linear_part = gcd(m, powmod(t, q, m) - t);
    for (Elem a : f->elements())
        if (linear_part.eval(a) == 0) out.push_back(Poly::linear(f, a));

    Poly tq2 = powmod(powmod(t, q, m), q, m);
    Poly quad_part = gcd(m, tq2 - t);
    quad_part = divmod(quad_part, linear_part).first;
    if (quad_part.degree() < 2) return out;
    if (q <= 256) {
        for (const Poly& g : irr_enumerate(2, f))
            if (divides(g, quad_part)) out.push_back(g);
    } else {
        out.push_back(quad_part);
    }
    return out;
}

bool proper(const Subspace& w) { return w.dim() > 0 && w.dim() < w.ambient_dim(); }

}  // namespace

ProbeReport probe(const GeneratedAlgebra& alg, std::uint64_t max_tries, std::uint64_t seed, std::size_t walk_length) {
    if (max_tries == 0) throw std::invalid_argument("probe: max_tries must be at least 1");
    ProbeReport rep;
    rep.seed = seed;
    Rng rng = Rng::stream(seed, 0);
    for (std::uint64_t attempt = 1; attempt <= max_tries; ++attempt) {
        rep.tries_used = attempt;
        const Mat x = random_element(alg, rng, walk_length);
        if (!is_cyclic(x)) continue;

        for (const Poly& g : low_degree_factors(min_poly(x))) {
            const Subspace ker = kernel_of_poly(g, x);
            for (const Vec& v : ker.basis()) {
                Subspace w = spin(v, alg);
                if (!proper(w)) continue;
                for (const Mat& gen : alg.generators())
                    if (!w.is_invariant(gen)) throw std::logic_error("probe: spun subspace is not invariant");
                rep.verdict = ProbeVerdict::reducible_with_witness;
                rep.witness = std::move(w);
                return rep;
            }
        }
        if (auto v = find_cyclic_vector(x)) {
            if (krylov_span(*v, x).dim() != alg.n()) throw std::logic_error("probe: cyclic vector check failed");
            rep.verdict = ProbeVerdict::cyclic_pair_found;
            rep.pair = std::make_pair(std::move(*v), x);
            return rep;
        }
    }
    rep.verdict = ProbeVerdict::inconclusive;
    return rep;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

GeneratedAlgebra parse_generators(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> n;
    FieldPtr field;
    std::vector<Mat> gens;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string body = line.substr(first, last - first + 1);
        if (!n) {
            std::istringstream hs(body);
            long long nv = 0;
            std::string qtext, extra;
            if (!(hs >> nv >> qtext) || (hs >> extra)) throw ParseError(lineno, "expected header \"n q\"");
            if (nv < 1 || nv > 64) throw ParseError(lineno, "n must be in 1..64");
            try {
                field = Field::parse(qtext);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            n = static_cast<std::size_t>(nv);
            continue;
        }
        try {
            Mat m = Mat::parse(field, body);
            if (m.rows() != *n || m.cols() != *n)
                throw DimensionError("expected a " + std::to_string(*n) + "x" + std::to_string(*n) + " matrix");
            gens.push_back(std::move(m));
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!n) throw ParseError(lineno, "missing header \"n q\"");
    if (gens.empty()) throw ParseError(lineno, "no generators");
    return GeneratedAlgebra(std::move(gens));
}

}  // namespace redcyc
