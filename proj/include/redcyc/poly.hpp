#ifndef REDCYC_POLY_HPP
#define REDCYC_POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "redcyc/gf.hpp"

namespace redcyc {

/// Polynomial over F_q, coefficients constant-term first with no trailing
/// zeros.  The zero polynomial has no coefficients and degree() == kZeroDegree.
class Poly {
   public:
    static constexpr long kZeroDegree = -1;

    explicit Poly(FieldPtr f) : field_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<Elem> coeffs);

    static Poly constant(FieldPtr f, Elem c);
    static Poly monomial(FieldPtr f, unsigned degree, Elem c = 1);
    /// t - lambda
    static Poly linear(FieldPtr f, Elem lambda);
    /// The monic polynomial of degree d whose lower coefficients are the
    /// base-q digits of `index` (c_0 least significant).  Enumerating
    /// index = 0 .. q^d - 1 visits every monic of degree d in ascending order.
    static Poly monic_from_index(FieldPtr f, unsigned d, std::uint64_t index);
    /// Parses "c0+c1*t+...+t^d"; extension-field coefficients are written in
    /// parentheses, e.g. "(t+1)*t^2+t".
    static Poly parse(FieldPtr f, std::string_view text);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

    /// Packed lower coefficients of a monic polynomial; inverse of monic_from_index.
    std::uint64_t monic_index() const;

    Poly monic() const;
    Elem eval(Elem x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem s) const;
    Poly shifted(unsigned k) const;  // multiply by t^k

    bool operator==(const Poly& o) const { return c_ == o.c_ && field_->same_as(*o.field_); }

    std::string to_string() const;

   private:
    void trim();
    FieldPtr field_;
    std::vector<Elem> c_;
};

/// (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Monic gcd; gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

struct Bezout {
    Poly g;  // monic gcd
    Poly s;
    Poly t;  // s*a + t*b == g
};
Bezout xgcd(const Poly& a, const Poly& b);

/// a^e mod m
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);

/// Irreducibility of a monic polynomial of degree >= 1.  Dispatches between
/// the two routes below: trial division when deg <= 8 and the divisor lists
/// fit the enumeration cap, distinct-degree otherwise.
bool is_irreducible(const Poly& f);
/// Trial division by every monic irreducible of degree <= deg/2.
bool is_irreducible_trial(const Poly& f);
/// gcd(t^(q^i) - t, f) == 1 for 1 <= i <= deg/2.
bool is_irreducible_ddf(const Poly& f);

inline constexpr std::uint64_t kPolyEnumerationCap = std::uint64_t{1} << 20;

/// All monic irreducibles of degree d, ascending by monic_index.
std::vector<Poly> irr_enumerate(unsigned d, const FieldPtr& f, std::uint64_t cap = kPolyEnumerationCap);

/// (1/d) sum_{e | d} mu(e) q^(d/e)
std::uint64_t irreducible_count(unsigned d, std::uint64_t q);

}  // namespace redcyc

#endif
