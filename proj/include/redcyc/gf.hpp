#ifndef REDCYC_GF_HPP
#define REDCYC_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace redcyc {

/// Canonical representative of an element of F_q.
///
/// For a prime field this is the residue in [0, p).  For F_{p^k} it is the
/// coefficient vector (c_0, ..., c_{k-1}) of the polynomial-basis
/// representation packed as the base-p integer c_0 + c_1 p + ... + c_{k-1} p^{k-1},
/// so "ascending representatives" and "ascending coefficient vectors" coincide.
using Elem = std::uint32_t;

class FieldError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^k <= 2^16.  Immutable once built.
class Field {
   public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// Validates (p, k, modulus).  For k > 1 without a modulus the least
    /// monic irreducible of degree k is chosen, where monic polynomials of a
    /// fixed degree are ordered by their packed coefficient index.
    static FieldPtr make(std::uint32_t p, unsigned k = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Parses "p", "p^k" or a plain prime power such as "9".
    static FieldPtr parse(std::string_view q_text);

    std::uint32_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    bool is_prime() const noexcept { return k_ == 1; }

    /// F_p coefficients of the defining polynomial, constant term first,
    /// length k+1.  Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    bool contains(Elem a) const noexcept { return a < q_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (k_ == 1) {
            Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept {
        if (k_ == 1) return a == 0 ? 0 : p_ - a;
        if (p_ == 2) return a;
        return neg_digits(a);
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (k_ == 1) return p_ == 2 ? (a & b) : static_cast<Elem>((a * b) % p_);
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    /// Throws FieldError on a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Embeds an integer via its residue mod p.
    Elem from_int(long long v) const noexcept;

    /// All q elements, ascending.  Throws if q exceeds `cap`.
    std::vector<Elem> elements(std::uint32_t cap = kMaxOrder) const;

    std::vector<std::uint32_t> digits(Elem a) const;
    Elem from_digits(std::span<const std::uint32_t> d) const;

    /// "3" for prime fields, "t^2+2*t+1"-style text over the basis otherwise.
    std::string format(Elem a) const;
    Elem parse_element(std::string_view text) const;

    /// "7" or "3^2"
    std::string order_text() const;
    /// "t^2+t+1"-style rendering of the modulus; empty for prime fields.
    std::string modulus_text() const;

    bool same_as(const Field& other) const noexcept {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

    Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

   private:
    Elem add_digits(Elem a, Elem b) const noexcept;
    Elem neg_digits(Elem a) const noexcept;
    void build_tables();

    std::uint32_t p_;
    unsigned k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pow_p_;  // p^i, i < k
    std::vector<Elem> exp_;             // extension fields only
    std::vector<std::uint32_t> log_;
    std::vector<Elem> inv_;
};

bool is_prime_u32(std::uint32_t n) noexcept;

/// Irreducibility of a monic polynomial over the prime field F_p, coefficients
/// constant-first.  Trial division by every monic polynomial of degree up to
/// half; only used for field moduli (degree <= 16, p^(deg/2) small).
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

/// A field element bundled with its field, for value-level arithmetic.
/// Bulk code works on raw Elem with a Field reference instead.
class FieldElement {
   public:
    FieldElement(FieldPtr f, Elem v);

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    FieldElement inv() const { return {field_, field_->inv(value_)}; }
    FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

    bool operator==(const FieldElement& o) const {
        return value_ == o.value_ && field_->same_as(*o.field_);
    }
    std::string to_string() const { return field_->format(value_); }

   private:
    void check_same(const FieldElement& o) const;

    FieldPtr field_;
    Elem value_;
};

/// Throws FieldError unless both fields are the same.
void require_same_field(const Field& a, const Field& b);

}  // namespace redcyc

#endif
