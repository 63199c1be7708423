#include "redcyc/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace redcyc {

bool is_prime_u32(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Remainder of a mod b over F_p, b monic.  Coefficients constant-first.
Coeffs rem_mod_p(Coeffs a, std::span<const std::uint32_t> b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint32_t lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                std::uint64_t t = static_cast<std::uint64_t>(lead) * b[i] % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::string render_in_t(const Coeffs& c) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
    const std::size_t deg = poly.size() - 1;
    if (poly.size() < 2 || poly.back() != 1) throw FieldError("modulus must be monic of degree >= 1");
    if (deg == 1) return true;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Coeffs div(d + 1, 0);
            std::uint64_t x = idx;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            div[d] = 1;
            if (rem_mod_p(Coeffs(poly.begin(), poly.end()), div, p).empty()) return false;
        }
    }
    return true;
}

FieldPtr Field::make(std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime_u32(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw FieldError("extension degree must be >= 1");
    if (ipow(p, k) > kMaxOrder)
        throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^16");
    if (k == 1) {
        if (modulus) throw FieldError("a prime field takes no modulus");
        return std::make_shared<const Field>(p, 1, Coeffs{});
    }
    Coeffs mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != k + 1 || mod.back() != 1)
            throw FieldError("modulus must be monic of degree " + std::to_string(k));
        for (auto c : mod)
            if (c >= p) throw FieldError("modulus coefficient out of range");
        if (!is_irreducible_mod_p(mod, p)) throw FieldError("modulus " + render_in_t(mod) + " is reducible");
    } else {
        const std::uint64_t count = ipow(p, k);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Coeffs cand(k + 1, 0);
            std::uint64_t x = idx;
            for (unsigned i = 0; i < k; ++i) {
                cand[i] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            cand[k] = 1;
            if (cand[0] != 0 && is_irreducible_mod_p(cand, p)) {
                mod = std::move(cand);
                break;
            }
        }
    }
    return std::make_shared<const Field>(p, k, std::move(mod));
}

FieldPtr Field::parse(std::string_view text) {
    auto to_u32 = [&](std::string_view s) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw FieldError("cannot parse field order '" + std::string(text) + "'");
        return v;
    };
    if (auto caret = text.find('^'); caret != std::string_view::npos)
        return make(to_u32(text.substr(0, caret)), to_u32(text.substr(caret + 1)));
    std::uint32_t q = to_u32(text);
    if (q < 2) throw FieldError("field order must be >= 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    unsigned k = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw FieldError(std::to_string(q) + " is not a prime power");
    return make(p, k);
}

Field::Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(static_cast<std::uint32_t>(ipow(p, k))), modulus_(std::move(modulus)) {
    pow_p_.resize(k_);
    std::uint32_t pw = 1;
    for (unsigned i = 0; i < k_; ++i) {
        pow_p_[i] = pw;
        pw *= p_;
    }
    if (k_ > 1) build_tables();
    inv_.assign(q_, 0);
    for (Elem a = 1; a < q_; ++a) {
        if (inv_[a] != 0) continue;
        const Elem b = k_ > 1 ? exp_[(q_ - 1 - log_[a]) % (q_ - 1)] : pow(a, p_ - 2);
        inv_[a] = b;
        inv_[b] = a;
    }
}

// Multiplication in F_p[t]/(modulus) is only done here, to find a primitive
// element and tabulate its powers.
void Field::build_tables() {
    auto mul_poly = [&](Elem a, Elem b) {
        Coeffs x = digits(a), y = digits(b), prod(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; j < k_; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
        Coeffs r = rem_mod_p(prod, modulus_, p_);
        r.resize(k_, 0);
        return from_digits(r);
    };
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (Elem g = 2; g < q_; ++g) {
        Elem x = 1;
        std::uint32_t order = 0;
        do {
            exp_[order++] = x;
            x = mul_poly(x, g);
        } while (x != 1 && order < q_ - 1);
        if (x == 1 && order == q_ - 1) break;
    }
    for (std::uint32_t i = 0; i + 1 < q_; ++i) log_[exp_[i]] = i;
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
    Elem out = 0;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * pow_p_[i];
        a /= p_;
        b /= p_;
    }
    return out;
}

Elem Field::neg_digits(Elem a) const noexcept {
    Elem out = 0;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * pow_p_[i];
        a /= p_;
    }
    return out;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw FieldError("division by zero in F_" + order_text());
    return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::from_int(long long v) const noexcept {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return static_cast<Elem>(m);
}

std::vector<Elem> Field::elements(std::uint32_t cap) const {
    if (q_ > cap) throw FieldError("field of order " + std::to_string(q_) + " exceeds enumeration cap");
    std::vector<Elem> out(q_);
    for (Elem i = 0; i < q_; ++i) out[i] = i;
    return out;
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
    std::vector<std::uint32_t> d(k_);
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const {
    Elem out = 0;
    for (std::size_t i = 0; i < d.size() && i < k_; ++i) out += (d[i] % p_) * pow_p_[i];
    return out;
}

std::string Field::format(Elem a) const {
    if (k_ == 1) return std::to_string(a);
    return render_in_t(digits(a));
}

Elem Field::parse_element(std::string_view text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw FieldError("empty field element");
    auto parse_int = [&](std::string_view t) -> long long {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
            throw FieldError("cannot parse field element '" + std::string(text) + "'");
        return v;
    };
    if (k_ == 1) return from_int(parse_int(s));

    std::vector<long long> acc(k_, 0);
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t end = s.find_first_of("+-", pos);
        std::string_view term = std::string_view(s).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end;
        if (term.empty()) throw FieldError("cannot parse field element '" + std::string(text) + "'");
        long long coef = 1;
        unsigned power = 0;
        auto tpos = term.find('t');
        if (tpos == std::string_view::npos) {
            coef = parse_int(term);
        } else {
            std::string_view head = term.substr(0, tpos);
            if (!head.empty()) {
                if (head.back() != '*') throw FieldError("cannot parse field element '" + std::string(text) + "'");
                coef = parse_int(head.substr(0, head.size() - 1));
            }
            std::string_view tail = term.substr(tpos + 1);
            power = 1;
            if (!tail.empty()) {
                if (tail.front() != '^') throw FieldError("cannot parse field element '" + std::string(text) + "'");
                power = static_cast<unsigned>(parse_int(tail.substr(1)));
            }
        }
        if (power >= k_) throw FieldError("power of t exceeds basis in '" + std::string(text) + "'");
        acc[power] += sign * coef;
    }
    std::vector<std::uint32_t> d(k_);
    for (unsigned i = 0; i < k_; ++i) d[i] = from_int(acc[i]);
    return from_digits(d);
}

std::string Field::order_text() const {
    if (k_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(k_);
}

std::string Field::modulus_text() const { return k_ == 1 ? std::string() : render_in_t(modulus_); }

void require_same_field(const Field& a, const Field& b) {
    if (&a != &b && !a.same_as(b))
        throw FieldError("field mismatch: F_" + a.order_text() + " vs F_" + b.order_text());
}

FieldElement::FieldElement(FieldPtr f, Elem v) : field_(std::move(f)), value_(v) {
    if (!field_) throw FieldError("null field");
    if (!field_->contains(v)) throw FieldError("value " + std::to_string(v) + " is not a canonical representative");
}

void FieldElement::check_same(const FieldElement& o) const { require_same_field(*field_, *o.field_); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->div(value_, o.value_)};
}

}  // namespace redcyc
