#ifndef REDCYC_MATRIX_HPP
#define REDCYC_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "redcyc/gf.hpp"
#include "redcyc/poly.hpp"

namespace redcyc {

/// Row vector over F_q.  Vectors act on matrices from the left: v -> vX.
using Vec = std::vector<Elem>;

class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over F_q.  Square in most uses; the off-diagonal
/// block of a stabilizer matrix is the rectangular exception.
class Mat {
   public:
    Mat(FieldPtr f, std::size_t rows, std::size_t cols);
    Mat(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Mat identity(FieldPtr f, std::size_t n);
    static Mat scalar(FieldPtr f, std::size_t n, Elem lambda);
    /// Block-diagonal sum; blocks must be square.
    static Mat block_diag(std::span<const Mat> blocks);
    /// Rows separated by ';', entries by ','.  Extension-field entries use
    /// the polynomial-basis text form ("t+1").
    static Mat parse(FieldPtr f, std::string_view text);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    /// n for a square matrix.
    std::size_t dim() const noexcept { return rows_; }

    Elem operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Elem v) noexcept { a_[i * cols_ + j] = v; }
    std::span<const Elem> row(std::size_t i) const noexcept { return {a_.data() + i * cols_, cols_}; }
    std::span<Elem> row(std::size_t i) noexcept { return {a_.data() + i * cols_, cols_}; }
    const std::vector<Elem>& entries() const noexcept { return a_; }
    std::vector<Elem>& entries() noexcept { return a_; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(Elem s) const;
    Mat pow(std::uint64_t e) const;
    Mat transpose() const;

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && field_->same_as(*o.field_);
    }

    std::string to_string() const;

   private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

Vec vec_mul(std::span<const Elem> v, const Mat& x, const Field& f);
Vec unit_vector(std::size_t n, std::size_t i);

/// Row-reduced echelon basis of a subspace of F_q^n.
class Subspace {
   public:
    Subspace(FieldPtr f, std::size_t n) : field_(std::move(f)), n_(n) {}

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vec>& basis() const noexcept { return basis_; }
    Mat basis_matrix() const;

    /// Inserts v; returns false if v was already in the span.
    bool insert(Vec v);
    bool contains(std::span<const Elem> v) const;
    /// W X subset of W
    bool is_invariant(const Mat& x) const;
    bool contains_subspace(const Subspace& other) const;
    /// Residue of v after elimination against the basis.
    Vec reduce(Vec v) const;

    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }

   private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<Vec> basis_;     // sorted by pivot, each pivot 1, pivot columns cleared elsewhere
    std::vector<std::size_t> pivots_;
};

/// Companion matrix C(a): ones on the superdiagonal, last row -a_0 .. -a_{r-1}.
Mat companion(const Poly& a);

/// f(X) by Horner.
Mat poly_eval(const Poly& f, const Mat& x);

Elem det(const Mat& x);
std::size_t rank(const Mat& x);
std::optional<Mat> inverse(const Mat& x);

/// det(tI - X) via reduction to upper Hessenberg form.
Poly char_poly(const Mat& x);

/// Monic polynomial of least degree with v m(X) = 0.
Poly order_poly(std::span<const Elem> v, const Mat& x);

/// lcm of the order polynomials of the standard basis vectors.
Poly min_poly(const Mat& x);

bool is_cyclic(const Mat& x);

/// <v, vX, vX^2, ...>
Subspace krylov_span(std::span<const Elem> v, const Mat& x);

/// { v : v f(X) = 0 }
Subspace kernel_of_poly(const Poly& f, const Mat& x);

/// Left null space { v : v M = 0 }.
Subspace left_kernel(const Mat& m);

/// Fixed-size scratch workspace for the census hot loop.  `test` decides
/// cyclicity by the same criterion as is_cyclic() and, for cyclic input,
/// returns the characteristic polynomial's monic index.  It tries the
/// standard basis vectors from the last one down as cyclic-vector candidates
/// and otherwise looks for the first linear relation among I, X, ..., X^n.
class CyclicKernel {
   public:
    CyclicKernel(FieldPtr f, std::size_t n);

    struct Result {
        bool cyclic;
        std::uint64_t charpoly_index;  // valid when cyclic
    };
    Result test(const Mat& x);
    /// Same, on a raw row-major n*n array.
    Result test(std::span<const Elem> x);

   private:
    FieldPtr field_;
    std::size_t n_;
    std::size_t width_;
    std::vector<Elem> rows_;       // echelon rows, augmented with polynomial coefficients
    std::vector<std::size_t> pivot_;
    std::vector<Elem> work_, next_;
    // fallback: echelon rows of vec(X^k) augmented with e_k
    std::vector<Elem> power_, power_next_, prow_;
    std::vector<std::size_t> ppivot_;

    Result test_by_powers(std::span<const Elem> x);
};

}  // namespace redcyc

#endif
