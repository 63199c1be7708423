#ifndef REDCYC_CYCLICTEST_HPP
#define REDCYC_CYCLICTEST_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redcyc/matrix.hpp"
#include "redcyc/rng.hpp"

// Random search for cyclic pairs (v, X) in a matrix algebra given by
// generators, with spinning to expose invariant subspaces.

namespace redcyc {

class GeneratedAlgebra {
   public:
    /// Generators must be non-empty, square, of one size and over one field.
    explicit GeneratedAlgebra(std::vector<Mat> generators);

    std::size_t n() const noexcept { return n_; }
    const FieldPtr& field() const noexcept { return gens_.front().field(); }
    const std::vector<Mat>& generators() const noexcept { return gens_; }

    /// Matrix units E_ij: generate all of M(n, q).
    static GeneratedAlgebra full(const FieldPtr& f, std::size_t n);
    /// Matrix units E_ij allowed in M(V)_U, U = <e_1..e_r>.
    static GeneratedAlgebra stabilizer(const FieldPtr& f, std::size_t n, std::size_t r);

   private:
    std::size_t n_;
    std::vector<Mat> gens_;
};

/// Starts at a random generator and takes length - 1 further steps, each
/// either X <- X G or X <- X + G for a random generator G.  length = 0 means 2n.
Mat random_element(const GeneratedAlgebra& alg, Rng& rng, std::size_t length = 0);

/// Smallest subspace containing v and closed under every generator.
Subspace spin(std::span<const Elem> v, const GeneratedAlgebra& alg);

enum class ProbeVerdict { reducible_with_witness, cyclic_pair_found, inconclusive };
const char* to_string(ProbeVerdict v) noexcept;

struct ProbeReport {
    ProbeVerdict verdict = ProbeVerdict::inconclusive;
    std::optional<Subspace> witness;
    std::optional<std::pair<Vec, Mat>> pair;
    std::uint64_t tries_used = 0;
    std::uint64_t seed = 0;
};

/// Deterministic cyclic vector for a cyclic X: standard basis, then sums
/// e_i + e_j, then every vector when q^n <= 2^16.
std::optional<Vec> find_cyclic_vector(const Mat& x);

/// Draws up to max_tries elements.  For the first cyclic draw X, spins
/// vectors of ker f(X) for the irreducible factors f of m_X of degree <= 2
/// and returns a proper invariant subspace if one appears; otherwise returns
/// X with a cyclic vector.
ProbeReport probe(const GeneratedAlgebra& alg, std::uint64_t max_tries, std::uint64_t seed, std::size_t walk_length = 0);

class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

/// First line "n q", then one matrix per line ("a,b;c,d").  Blank lines and
/// lines starting with '#' are skipped.
GeneratedAlgebra parse_generators(std::istream& in);

}  // namespace redcyc

#endif
