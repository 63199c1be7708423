#include "redcyc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace redcyc {

namespace {

std::uint64_t checked_pow(std::uint64_t b, unsigned e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

void require_monic_nonconstant(const Poly& f, const char* what) {
    if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument(std::string(what) + ": polynomial must be monic of degree >= 1");
}

}  // namespace

Poly::Poly(FieldPtr f, std::vector<Elem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
    for (Elem c : c_)
        if (!field_->contains(c)) throw FieldError("polynomial coefficient out of range");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr f, Elem c) { return Poly(std::move(f), {c}); }

Poly Poly::monomial(FieldPtr f, unsigned degree, Elem c) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(f), std::move(v));
}

Poly Poly::linear(FieldPtr f, Elem lambda) {
    Elem c0 = f->neg(lambda);
    return Poly(std::move(f), {c0, 1});
}

Poly Poly::monic_from_index(FieldPtr f, unsigned d, std::uint64_t index) {
    std::vector<Elem> v(d + 1, 0);
    const std::uint64_t q = f->q();
    for (unsigned i = 0; i < d; ++i) {
        v[i] = static_cast<Elem>(index % q);
        index /= q;
    }
    v[d] = 1;
    Poly out(std::move(f));
    out.c_ = std::move(v);
    return out;
}

std::uint64_t Poly::monic_index() const {
    std::uint64_t idx = 0;
    const std::uint64_t q = field_->q();
    for (long i = degree() - 1; i >= 0; --i) idx = idx * q + c_[static_cast<std::size_t>(i)];
    return idx;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(lead()));
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(*field_, *o.field_);
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->add(coeff(i), o.coeff(i));
    Poly r(field_);
    r.c_ = std::move(v);
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(*field_, *o.field_);
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->sub(coeff(i), o.coeff(i));
    Poly r(field_);
    r.c_ = std::move(v);
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(*field_, *o.field_);
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = field_->add(v[i + j], field_->mul(c_[i], o.c_[j]));
    }
    Poly r(field_);
    r.c_ = std::move(v);
    r.trim();
    return r;
}

Poly Poly::scaled(Elem s) const {
    Poly r(field_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->mul(c_[i], s);
    r.trim();
    return r;
}

Poly Poly::shifted(unsigned k) const {
    if (is_zero()) return *this;
    Poly r(field_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    const Field& f = *field_;
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        std::string coef = f.format(c_[i]);
        if (!f.is_prime() && coef.find('t') != std::string::npos) coef = "(" + coef + ")";
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += coef;
            continue;
        }
        if (c_[i] != 1) out += coef + "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Poly Poly::parse(FieldPtr f, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    auto fail = [&]() { return std::invalid_argument("cannot parse polynomial '" + std::string(text) + "'"); };

    // Split at top-level '+' / '-' (outside parentheses).
    std::vector<std::pair<int, std::string>> terms;
    int depth = 0;
    int sign = 1;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw fail();
        if (depth == 0 && (c == '+' || c == '-') && !(cur.empty() && i == 0)) {
            if (cur.empty()) throw fail();
            terms.emplace_back(sign, cur);
            cur.clear();
            sign = c == '-' ? -1 : 1;
            continue;
        }
        if (depth == 0 && i == 0 && (c == '+' || c == '-')) {
            sign = c == '-' ? -1 : 1;
            continue;
        }
        cur += c;
    }
    if (depth != 0 || cur.empty()) throw fail();
    terms.emplace_back(sign, cur);

    std::vector<Elem> acc;
    for (auto& [sg, term] : terms) {
        Elem coef = 1;
        unsigned power = 0;
        std::string rest = term;
        if (rest.front() == '(') {
            auto close = rest.find(')');
            coef = f->parse_element(rest.substr(1, close - 1));
            rest = rest.substr(close + 1);
            if (!rest.empty()) {
                if (rest.front() != '*') throw fail();
                rest = rest.substr(1);
            }
        } else {
            auto tpos = rest.find('t');
            std::string head = tpos == std::string::npos ? rest : rest.substr(0, tpos);
            if (tpos == std::string::npos) {
                coef = f->parse_element(head);
                rest.clear();
            } else {
                if (!head.empty()) {
                    if (head.back() != '*') throw fail();
                    coef = f->parse_element(head.substr(0, head.size() - 1));
                }
                rest = rest.substr(tpos);
            }
        }
        if (!rest.empty()) {
            if (rest.front() != 't') throw fail();
            power = 1;
            if (rest.size() > 1) {
                if (rest[1] != '^' || rest.size() < 3) throw fail();
                try {
                    std::size_t used = 0;
                    power = static_cast<unsigned>(std::stoul(rest.substr(2), &used));
                    if (used != rest.size() - 2) throw fail();
                } catch (const std::logic_error&) {
                    throw fail();
                }
            }
        }
        if (acc.size() <= power) acc.resize(power + 1, 0);
        Elem c = sg < 0 ? f->neg(coef) : coef;
        acc[power] = f->add(acc[power], c);
    }
    return Poly(std::move(f), std::move(acc));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(*a.field(), *b.field());
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = *a.field();
    std::vector<Elem> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    if (r.size() < bc.size()) return {Poly(a.field()), a};
    std::vector<Elem> quot(r.size() - db, 0);
    const Elem inv_lead = f.inv(b.lead());
    for (std::size_t i = r.size(); i-- > db;) {
        Elem c = f.mul(r[i], inv_lead);
        quot[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
    }
    r.resize(db);
    return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return divmod(a * b, gcd(a, b)).first.monic();
}

Bezout xgcd(const Poly& a, const Poly& b) {
    const FieldPtr& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, 1), s1(f);
    Poly t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Elem inv = f->inv(r0.lead());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
    Poly result = Poly::constant(a.field(), 1) % m;
    Poly base = a % m;
    while (e) {
        if (e & 1) result = (result * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return result;
}

bool is_irreducible_trial(const Poly& f) {
    require_monic_nonconstant(f, "is_irreducible_trial");
    const unsigned deg = static_cast<unsigned>(f.degree());
    for (unsigned d = 1; d <= deg / 2; ++d)
        for (const Poly& g : irr_enumerate(d, f.field()))
            if (divides(g, f)) return false;
    return true;
}

bool is_irreducible_ddf(const Poly& f) {
    require_monic_nonconstant(f, "is_irreducible_ddf");
    const unsigned deg = static_cast<unsigned>(f.degree());
    const Poly t = Poly::monomial(f.field(), 1);
    Poly frob = t % f;  // t^(q^i) mod f
    for (unsigned i = 1; i <= deg / 2; ++i) {
        frob = powmod(frob, f.field()->q(), f);
        if (!gcd(frob - t, f).is_one()) return false;
    }
    return true;
}

bool is_irreducible(const Poly& f) {
    require_monic_nonconstant(f, "is_irreducible");
    const unsigned deg = static_cast<unsigned>(f.degree());
    if (deg <= 8 && checked_pow(f.field()->q(), deg / 2, kPolyEnumerationCap) <= kPolyEnumerationCap)
        return is_irreducible_trial(f);
    return is_irreducible_ddf(f);
}

std::vector<Poly> irr_enumerate(unsigned d, const FieldPtr& f, std::uint64_t cap) {
    if (d == 0) throw std::invalid_argument("irr_enumerate: degree must be >= 1");
    const std::uint64_t count = checked_pow(f->q(), d, cap);
    if (count > cap) throw std::length_error("irr_enumerate: q^d exceeds the enumeration cap");
    std::vector<Poly> out;
    if (d == 1) {
        for (std::uint64_t idx = 0; idx < count; ++idx) out.push_back(Poly::monic_from_index(f, 1, idx));
        return out;
    }
    // Divisor lists are built once per call rather than once per candidate.
    const bool trial = d <= 8 && checked_pow(f->q(), d / 2, cap) <= cap;
    std::vector<Poly> divisors;
    if (trial)
        for (unsigned e = 1; e <= d / 2; ++e)
            for (Poly& g : irr_enumerate(e, f, cap)) divisors.push_back(std::move(g));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly g = Poly::monic_from_index(f, d, idx);
        if (g.coeff(0) == 0) continue;  // divisible by t
        bool irreducible = true;
        if (trial) {
            for (const Poly& h : divisors)
                if (divides(h, g)) {
                    irreducible = false;
                    break;
                }
        } else {
            irreducible = is_irreducible_ddf(g);
        }
        if (irreducible) out.push_back(std::move(g));
    }
    return out;
}

std::uint64_t irreducible_count(unsigned d, std::uint64_t q) {
    auto mobius = [](unsigned n) {
        int mu = 1;
        for (unsigned p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
        if (n > 1) mu = -mu;
        return mu;
    };
    long long total = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e) continue;
        long long term = 1;
        for (unsigned i = 0; i < d / e; ++i) term *= static_cast<long long>(q);
        total += mobius(e) * term;
    }
    return static_cast<std::uint64_t>(total / d);
}

}  // namespace redcyc
