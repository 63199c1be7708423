#include "redcyc/counting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace redcyc {

namespace {

void require_instance(unsigned n, unsigned r, unsigned long q) {
    if (r == 0 || r >= n) throw std::invalid_argument("need 0 < r < n (got n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
    if (q < 2) throw std::invalid_argument("need q >= 2");
}

BigInt to_integer(const Rational& x, const char* what) {
    if (!is_integer(x)) throw std::logic_error(std::string(what) + " is not an integer");
    return x.get_num();
}

}  // namespace

Rational omega(unsigned n, unsigned long q) {
    Rational w = 1;
    for (unsigned i = 1; i <= n; ++i) w *= Rational(1) - qpow(q, -static_cast<long>(i));
    return w;
}

Orders orders(unsigned n, unsigned r, unsigned long q) {
    require_instance(n, r, q);
    Orders o;
    o.stabilizer_algebra = ipow(BigInt(q), n * n - n * r + r * r);
    o.stabilizer_group = to_integer(Rational(o.stabilizer_algebra) * omega(r, q) * omega(n - r, q), "|GL(V)_U|");
    o.general_linear = to_integer(Rational(ipow(BigInt(q), n * n)) * omega(n, q), "|GL(n,q)|");
    return o;
}

BigInt qbinom(unsigned r, unsigned d, unsigned long q) {
    if (d > r) throw std::invalid_argument("qbinom: need d <= r");
    Rational acc = 1;
    const BigInt qr = ipow(BigInt(q), r), qd = ipow(BigInt(q), d);
    for (unsigned i = 0; i < d; ++i) {
        const BigInt qi = ipow(BigInt(q), i);
        acc *= make_rational(qr - qi, qd - qi);
    }
    return to_integer(acc, "q-binomial coefficient");
}

BigInt coprime_count(unsigned r, unsigned s, unsigned long q) {
    const BigInt total = ipow(BigInt(q), r + s);
    if (r == 0 || s == 0) return total;
    return total - ipow(BigInt(q), r + s - 1);
}

BigInt coprime_count_recurrence(unsigned r, unsigned s, unsigned long q) {
    // c depends on (r, s) only through the pair; memoise along the diagonal.
    std::map<std::pair<unsigned, unsigned>, BigInt> memo;
    auto c = [&](auto&& self, unsigned a, unsigned b) -> BigInt {
        if (a == 0) return ipow(BigInt(q), b);
        if (b == 0) return ipow(BigInt(q), a);
        if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
        BigInt v = ipow(BigInt(q), a + b);
        for (unsigned k = 1; k <= std::min(a, b); ++k) v -= ipow(BigInt(q), k) * self(self, a - k, b - k);
        memo.emplace(std::make_pair(a, b), v);
        return v;
    };
    return c(c, r, s);
}

BigInt coprime_avoiding_lower(unsigned r, unsigned s, unsigned d, unsigned long q) {
    if (d < 1 || d > std::min(r, s)) throw std::invalid_argument("coprime_avoiding_lower: need 1 <= d <= min(r, s)");
    const unsigned e = r + s;
    BigInt v = ipow(BigInt(q), e) - ipow(BigInt(q), e - 1) - 2 * ipow(BigInt(q), e - d) + 2 * ipow(BigInt(q), e - 2 * d);
    return v < 0 ? BigInt(0) : v;
}

namespace {

template <class Pred>
BigInt count_pairs(unsigned r, unsigned s, const FieldPtr& f, Pred&& keep) {
    const std::uint64_t q = f->q();
    std::uint64_t na = 1, nb = 1;
    for (unsigned i = 0; i < r; ++i) na *= q;
    for (unsigned i = 0; i < s; ++i) nb *= q;
    if (na * nb > kPolyEnumerationCap) throw std::invalid_argument("brute-force pair count too large");
    std::vector<Poly> bs;
    for (std::uint64_t j = 0; j < nb; ++j) bs.push_back(Poly::monic_from_index(f, s, j));
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < na; ++i) {
        const Poly a = Poly::monic_from_index(f, r, i);
        for (const Poly& b : bs)
            if (keep(a, b)) ++count;
    }
    return BigInt(std::to_string(count));
}

}  // namespace

BigInt coprime_count_brute(unsigned r, unsigned s, const FieldPtr& f) {
    return count_pairs(r, s, f, [](const Poly& a, const Poly& b) { return gcd(a, b).is_one(); });
}

BigInt coprime_avoiding_brute(unsigned r, unsigned s, const Poly& g) {
    return count_pairs(r, s, g.field(), [&](const Poly& a, const Poly& b) {
        return gcd(a, b).is_one() && gcd(g, a * b).is_one();
    });
}

BigInt centralizer_double_companion(unsigned d, unsigned long q) {
    if (d < 1) throw std::invalid_argument("need d >= 1");
    const BigInt qd = ipow(BigInt(q), d);
    return (qd - 1) * (qd - 1) * qd;
}

BigInt class_size_double_companion(unsigned d, unsigned long q) {
    if (d < 1) throw std::invalid_argument("need d >= 1");
    const Rational w = omega(d, q);
    const Rational denom = (Rational(1) - qpow(q, -static_cast<long>(d))) * (Rational(1) - qpow(q, -static_cast<long>(d)));
    return to_integer(Rational(ipow(BigInt(q), 3 * (d * d - d))) * w * w / denom, "class size");
}

BigInt double_stabilizer_order(unsigned d, unsigned long q) {
    const Rational w = omega(d, q);
    return to_integer(Rational(ipow(BigInt(q), 3 * d * d)) * w * w, "|GL(V0)_U0|");
}

Interval np_bounds(unsigned d, unsigned long q) {
    if (d < 1) throw std::invalid_argument("np_bounds: need d >= 1");
    if (d == 1) return {0, 0};
    const Rational qi = make_rational(1, q);
    const Rational q3 = qi * qi * qi;
    return {q3 / (1 + qi), q3 / ((1 - qi) * (1 - qi * qi))};
}

Interval np_bounds_simplified(unsigned long q) {
    const Rational q3 = qpow(q, -3);
    return {Rational(2, 3) * q3, Rational(8, 3) * q3};
}

Pi3Upper pi3_upper(unsigned n, unsigned r, unsigned long q) {
    require_instance(n, r, q);
    const Rational qi = make_rational(1, q);
    Rational sum = qi * qi / ((1 - qi) * (1 - qi));
    const unsigned m = std::min(r, n - r);
    for (unsigned d = 2; d <= m; ++d) {
        const Rational qd = qpow(q, d);
        const Rational qmd = qpow(q, -static_cast<long>(d));
        sum += (qd - q) / d * qpow(q, -3 * static_cast<long>(d)) / ((1 - qmd) * (1 - qmd));
    }
    return {sum, qi * qi * (1 + Rational(58, 9) * qi)};
}

Rational pi3_lower(unsigned n, unsigned r, unsigned long q) {
    require_instance(n, r, q);
    const Rational qi = make_rational(1, q);
    const Rational q2 = qi * qi;
    const unsigned m = std::min(r, n - r);
    if (n == 2) return q2;
    if (m == 1) {
        const Rational inner = 1 - q2 - q2 * qi - q2 * q2;
        return q2 * inner * inner * (1 - qi);
    }
    return q2 * (1 - 3 * qi + 4 * q2 * qi);
}

Rational pi3_lower_uniform(unsigned long q) {
    const Rational qi = make_rational(1, q);
    return qi * qi * (1 - 2 * qi);
}

TheoremBounds theorem_bounds(unsigned n, unsigned r, unsigned long q) {
    require_instance(n, r, q);
    const Rational qi = make_rational(1, q);
    TheoremBounds b;
    b.lower = qi * qi * (1 - Rational(4, 3) * qi);
    b.upper = qi * qi * (1 + Rational(35, 3) * qi);
    b.upper_vacuous = b.upper >= 1;
    return b;
}

namespace {

// Limiting proportions of cyclic matrices, coefficients of q^0 .. q^-7,
// transcribed from the published tables (rows 6 and 7 coincide).
constexpr std::array<std::array<int, 8>, 7> kAlgebraTable = {{
    {1, 0, -1, -2, -1, 0, 2, 3},
    {1, 0, -1, -4, -1, 4, 5, 4},
    {1, 0, -1, -4, -3, 4, 11, 8},
    {1, 0, -1, -4, -3, 2, 11, 14},
    {1, 0, -1, -4, -3, 2, 9, 14},
    {1, 0, -1, -4, -3, 2, 9, 12},
    {1, 0, -1, -4, -3, 2, 9, 12},
}};

constexpr std::array<std::array<int, 8>, 7> kGroupTable = {{
    {1, 0, -1, -2, 0, 1, 3, 1},
    {1, 0, -1, -3, 1, 3, 4, -2},
    {1, 0, -1, -3, 1, 4, 4, -5},
    {1, 0, -1, -3, 1, 4, 4, -6},
    {1, 0, -1, -3, 1, 4, 4, -6},
    {1, 0, -1, -3, 1, 4, 4, -6},
    {1, 0, -1, -3, 1, 4, 4, -6},
}};

}  // namespace

Rational TableSeries::evaluate(unsigned long q) const {
    Rational acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * qpow(q, -static_cast<long>(i));
    return acc;
}

TableSeries table_series(unsigned r, Mode mode) {
    if (r < 1 || r > 7) throw std::invalid_argument("table_series: dim U must be in 1..7");
    const auto& table = mode == Mode::algebra ? kAlgebraTable : kGroupTable;
    return {r, mode, table[r - 1]};
}

bool pentagonal_check(unsigned long q, unsigned n_max) {
    const Rational qi = make_rational(1, q);
    const Rational bound = 1 - qi - qi * qi + qpow(q, -5);
    Rational w = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        w *= 1 - qpow(q, -static_cast<long>(n));
        if (!(w > bound)) return false;
    }
    return true;
}

BoundsReport bounds_report(unsigned n, unsigned r, unsigned long q) {
    BoundsReport b;
    b.n = n;
    b.r = r;
    b.q = q;
    const auto thm = theorem_bounds(n, r, q);
    b.theorem_lower = thm.lower;
    b.theorem_upper = thm.upper;
    b.theorem_upper_vacuous = thm.upper_vacuous;
    b.pi3_lower = pi3_lower(n, r, q);
    b.pi3_lower_uniform = pi3_lower_uniform(q);
    const auto up = pi3_upper(n, r, q);
    b.pi3_upper = up.finite_sum;
    b.pi3_upper_closed = up.closed_form;
    const auto np = np_bounds(2, q);
    b.np_lower = np.lower;
    b.np_upper = np.upper;
    b.orders = orders(n, r, q);
    return b;
}

}  // namespace redcyc
