#ifndef REDCYC_COUNTING_HPP
#define REDCYC_COUNTING_HPP

#include <array>
#include <utility>

#include "redcyc/rational.hpp"
#include "redcyc/stab.hpp"

// Closed formulas and bounds for the density of non-cyclic matrices in the
// maximal reducible algebra M(V)_U, dim V = n, dim U = r, over F_q.  All
// values are exact rationals or integers.

namespace redcyc {

/// prod_{i=1..n} (1 - q^-i); omega(0, q) = 1.
Rational omega(unsigned n, unsigned long q);

struct Orders {
    BigInt stabilizer_algebra;  // |M(V)_U| = q^(n^2 - nr + r^2)
    BigInt stabilizer_group;    // |GL(V)_U| = |M(V)_U| omega(r) omega(n-r)
    BigInt general_linear;      // |GL(n, q)| = q^(n^2) omega(n)
};
Orders orders(unsigned n, unsigned r, unsigned long q);

/// Number of d-dimensional subspaces of F_q^r.
BigInt qbinom(unsigned r, unsigned d, unsigned long q);

/// Coprime ordered pairs of monic polynomials of degrees (r, s), closed form.
BigInt coprime_count(unsigned r, unsigned s, unsigned long q);
/// Same count from c(r,s) = q^(r+s) - sum_{k=1..min(r,s)} q^k c(r-k, s-k).
BigInt coprime_count_recurrence(unsigned r, unsigned s, unsigned long q);

/// q^(r+s) (1 - q^-1 - 2q^-d + 2q^-2d), clamped at 0.  A lower bound on the
/// coprime pairs (a, b) with gcd(f, ab) = 1 for any fixed f in Irr(d, q).
/// Requires 1 <= d <= min(r, s).
BigInt coprime_avoiding_lower(unsigned r, unsigned s, unsigned d, unsigned long q);

/// Direct count of coprime monic pairs (a, b), deg a = r, deg b = s.
BigInt coprime_count_brute(unsigned r, unsigned s, const FieldPtr& f);
/// Direct count of those pairs with additionally gcd(g, ab) = 1.
BigInt coprime_avoiding_brute(unsigned r, unsigned s, const Poly& g);

/// Order of the centralizer of diag(C(f), C(f)), f in Irr(d, q), inside the
/// stabilizer of a d-subspace of F_q^(2d): (q^d - 1)^2 q^d.
BigInt centralizer_double_companion(unsigned d, unsigned long q);
/// q^(3(d^2-d)) omega(d,q)^2 / (1 - q^-d)^2
BigInt class_size_double_companion(unsigned d, unsigned long q);
/// q^(3d^2) omega(d,q)^2, the order of that stabilizer.
BigInt double_stabilizer_order(unsigned d, unsigned long q);

struct Interval {
    Rational lower;
    Rational upper;
};

/// Bounds on P(X in M(d, q) non-cyclic): the open interval
/// (q^-3/(1+q^-1), q^-3/((1-q^-1)(1-q^-2))) for d >= 2, and exactly 0 for d = 1.
Interval np_bounds(unsigned d, unsigned long q);
/// The coarser [2/3 q^-3, 8/3 q^-3].
Interval np_bounds_simplified(unsigned long q);

struct Pi3Upper {
    Rational finite_sum;   // q^-2/(1-q^-1)^2 + sum_{d=2..min(r,n-r)} (q^d-q)/d * q^-3d/(1-q^-d)^2
    Rational closed_form;  // q^-2 (1 + 58 q^-1 / 9)
};
Pi3Upper pi3_upper(unsigned n, unsigned r, unsigned long q);

/// Lower bound on n_3 / |M(V)_U|, after replacing r by min(r, n-r):
///   n = 2:           q^-2 (exact)
///   r = 1, n >= 3:   q^-2 (1 - q^-2 - q^-3 - q^-4)^2 (1 - q^-1)
///   r >= 2:          q^-2 (1 - 3q^-1 + 4q^-3)
Rational pi3_lower(unsigned n, unsigned r, unsigned long q);
/// q^-2 (1 - 2q^-1), valid for every 0 < r < n.
Rational pi3_lower_uniform(unsigned long q);

struct TheoremBounds {
    Rational lower;  // q^-2 (1 - 4/3 q^-1)
    Rational upper;  // q^-2 (1 + 35/3 q^-1)
    bool upper_vacuous;  // upper >= 1, i.e. q = 2
};
TheoremBounds theorem_bounds(unsigned n, unsigned r, unsigned long q);

/// Truncated power series in q^-1 for the limiting proportion of cyclic
/// matrices as dim V grows, indexed by dim U.
struct TableSeries {
    unsigned r;
    Mode mode;
    std::array<int, 8> coeffs;  // coefficient of q^-i, i = 0..7
    static constexpr int truncation_order = 7;

    Rational evaluate(unsigned long q) const;
};
TableSeries table_series(unsigned r, Mode mode);

/// omega(n, q) > 1 - q^-1 - q^-2 + q^-5 for every n <= n_max.
bool pentagonal_check(unsigned long q, unsigned n_max);

struct BoundsReport {
    unsigned n, r;
    unsigned long q;
    Rational theorem_lower, theorem_upper;
    bool theorem_upper_vacuous;
    Rational pi3_lower, pi3_lower_uniform;
    Rational pi3_upper, pi3_upper_closed;
    Rational np_lower, np_upper;  // per-block bounds, apply when the block has size >= 2
    Orders orders;
};
BoundsReport bounds_report(unsigned n, unsigned r, unsigned long q);

}  // namespace redcyc

#endif
