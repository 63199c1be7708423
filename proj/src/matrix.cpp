#include "redcyc/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace redcyc {

namespace {

void require_square(const Mat& x, const char* what) {
    if (!x.is_square()) throw DimensionError(std::string(what) + ": matrix must be square");
}

// dst -= s * src over the first len entries
inline void axpy_sub(Elem* dst, const Elem* src, Elem s, std::size_t len, const Field& f) {
    if (s == 0) return;
    for (std::size_t i = 0; i < len; ++i)
        if (src[i] != 0) dst[i] = f.sub(dst[i], f.mul(s, src[i]));
}

inline void scale(Elem* v, Elem s, std::size_t len, const Field& f) {
    for (std::size_t i = 0; i < len; ++i) v[i] = f.mul(v[i], s);
}

std::string trim_copy(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

Mat::Mat(FieldPtr f, std::size_t rows, std::size_t cols) : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Mat::Mat(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw DimensionError("matrix entry count does not match shape");
    for (Elem e : a_)
        if (!field_->contains(e)) throw FieldError("matrix entry out of range");
}

Mat Mat::identity(FieldPtr f, std::size_t n) { return scalar(std::move(f), n, 1); }

Mat Mat::scalar(FieldPtr f, std::size_t n, Elem lambda) {
    Mat m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, lambda);
    return m;
}

Mat Mat::block_diag(std::span<const Mat> blocks) {
    if (blocks.empty()) throw DimensionError("block_diag needs at least one block");
    std::size_t n = 0;
    for (const Mat& b : blocks) {
        require_square(b, "block_diag");
        require_same_field(*blocks.front().field(), *b.field());
        n += b.dim();
    }
    Mat m(blocks.front().field(), n, n);
    std::size_t off = 0;
    for (const Mat& b : blocks) {
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) m.set(off + i, off + j, b(i, j));
        off += b.dim();
    }
    return m;
}

Mat Mat::parse(FieldPtr f, std::string_view text) {
    std::vector<std::vector<Elem>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        std::string row_text = trim_copy(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (row_text.empty()) throw DimensionError("empty matrix row in '" + std::string(text) + "'");
        std::vector<Elem> row;
        std::size_t s = 0;
        while (s <= row_text.size()) {
            std::size_t e = row_text.find(',', s);
            row.push_back(f->parse_element(trim_copy(std::string_view(row_text).substr(s, e == std::string::npos ? std::string::npos : e - s))));
            if (e == std::string::npos) break;
            s = e + 1;
        }
        rows.push_back(std::move(row));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    const std::size_t cols = rows.front().size();
    std::vector<Elem> entries;
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionError("ragged matrix rows in '" + std::string(text) + "'");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Mat(std::move(f), rows.size(), cols, std::move(entries));
}

Mat Mat::operator+(const Mat& o) const {
    require_same_field(*field_, *o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add: shape mismatch");
    Mat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    require_same_field(*field_, *o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sub: shape mismatch");
    Mat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], o.a_[i]);
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    require_same_field(*field_, *o.field_);
    if (cols_ != o.rows_) throw DimensionError("matrix mul: inner dimension mismatch");
    const Field& f = *field_;
    Mat r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elem s = a_[i * cols_ + k];
            if (s == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.a_[i * o.cols_ + j] = f.add(r.a_[i * o.cols_ + j], f.mul(s, o.a_[k * o.cols_ + j]));
        }
    return r;
}

Mat Mat::scaled(Elem s) const {
    Mat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->mul(a_[i], s);
    return r;
}

Mat Mat::pow(std::uint64_t e) const {
    require_square(*this, "pow");
    Mat result = identity(field_, rows_);
    Mat base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Mat Mat::transpose() const {
    Mat r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, (*this)(i, j));
    return r;
}

std::string Mat::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ',';
            out += field_->format((*this)(i, j));
        }
    }
    return out;
}

Vec vec_mul(std::span<const Elem> v, const Mat& x, const Field& f) {
    if (v.size() != x.rows()) throw DimensionError("vector length does not match matrix");
    Vec out(x.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        auto row = x.row(i);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(v[i], row[j]));
    }
    return out;
}

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

// --- Subspace ---------------------------------------------------------------

Vec Subspace::reduce(Vec v) const {
    const Field& f = *field_;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        Elem c = v[pivots_[b]];
        if (c != 0) axpy_sub(v.data(), basis_[b].data(), c, n_, f);
    }
    return v;
}

bool Subspace::insert(Vec v) {
    if (v.size() != n_) throw DimensionError("subspace: vector length mismatch");
    const Field& f = *field_;
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (it == v.end()) return false;
    const std::size_t piv = static_cast<std::size_t>(it - v.begin());
    scale(v.data(), f.inv(v[piv]), n_, f);
    for (auto& row : basis_) {
        Elem c = row[piv];
        if (c != 0) axpy_sub(row.data(), v.data(), c, n_, f);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, piv);
    basis_.insert(basis_.begin() + idx, std::move(v));
    return true;
}

bool Subspace::contains(std::span<const Elem> v) const {
    Vec r = reduce(Vec(v.begin(), v.end()));
    return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool Subspace::is_invariant(const Mat& x) const {
    for (const auto& b : basis_)
        if (!contains(vec_mul(b, x, *field_))) return false;
    return true;
}

bool Subspace::contains_subspace(const Subspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Mat Subspace::basis_matrix() const {
    Mat m(field_, basis_.size(), n_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < n_; ++j) m.set(i, j, basis_[i][j]);
    return m;
}

// --- polynomial / matrix interplay -----------------------------------------

Mat companion(const Poly& a) {
    if (a.degree() < 1 || !a.is_monic()) throw std::invalid_argument("companion: polynomial must be monic of degree >= 1");
    const std::size_t r = static_cast<std::size_t>(a.degree());
    const Field& f = *a.field();
    Mat m(a.field(), r, r);
    for (std::size_t i = 0; i + 1 < r; ++i) m.set(i, i + 1, 1);
    for (std::size_t j = 0; j < r; ++j) m.set(r - 1, j, f.neg(a.coeff(j)));
    return m;
}

Mat poly_eval(const Poly& p, const Mat& x) {
    require_square(x, "poly_eval");
    require_same_field(*p.field(), *x.field());
    const Field& f = *x.field();
    Mat acc(x.field(), x.dim(), x.dim());
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * x;
        for (std::size_t d = 0; d < x.dim(); ++d) acc.set(d, d, f.add(acc(d, d), c[i]));
    }
    return acc;
}

Elem det(const Mat& x) {
    require_square(x, "det");
    const Field& f = *x.field();
    const std::size_t n = x.dim();
    std::vector<Elem> a = x.entries();
    Elem d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
            d = f.neg(d);
        }
        Elem p = a[col * n + col];
        d = f.mul(d, p);
        Elem pinv = f.inv(p);
        for (std::size_t i = col + 1; i < n; ++i) {
            Elem c = a[i * n + col];
            if (c != 0) axpy_sub(&a[i * n + col], &a[col * n + col], f.mul(c, pinv), n - col, f);
        }
    }
    return d;
}

std::size_t rank(const Mat& x) {
    Subspace s(x.field(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) s.insert(Vec(x.row(i).begin(), x.row(i).end()));
    return s.dim();
}

std::optional<Mat> inverse(const Mat& x) {
    require_square(x, "inverse");
    const Field& f = *x.field();
    const std::size_t n = x.dim(), w = 2 * n;
    std::vector<Elem> a(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * w + j] = x(i, j);
        a[i * w + n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * w + col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < w; ++j) std::swap(a[piv * w + j], a[col * w + j]);
        scale(&a[col * w], f.inv(a[col * w + col]), w, f);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Elem c = a[i * w + col];
            if (c != 0) axpy_sub(&a[i * w], &a[col * w], c, w, f);
        }
    }
    Mat inv(x.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, a[i * w + n + j]);
    return inv;
}

Poly char_poly(const Mat& x) {
    require_square(x, "char_poly");
    const Field& f = *x.field();
    const std::size_t n = x.dim();
    std::vector<Elem> h = x.entries();
    auto at = [&](std::size_t i, std::size_t j) -> Elem& { return h[i * n + j]; };

    // Similarity transform to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && at(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(at(r, piv), at(r, j + 1));
        }
        const Elem pinv = f.inv(at(j + 1, j));
        for (std::size_t k = j + 2; k < n; ++k) {
            Elem u = f.mul(at(k, j), pinv);
            if (u == 0) continue;
            for (std::size_t c = 0; c < n; ++c) at(k, c) = f.sub(at(k, c), f.mul(u, at(j + 1, c)));
            for (std::size_t r = 0; r < n; ++r) at(r, j + 1) = f.add(at(r, j + 1), f.mul(u, at(r, k)));
        }
    }

    // p_m = (t - h_mm) p_{m-1} - sum_{i<m} h_im (h_{i+1,i} ... h_{m,m-1}) p_{i-1}
    const FieldPtr& fp = x.field();
    std::vector<Poly> p;
    p.reserve(n + 1);
    p.push_back(Poly::constant(fp, 1));
    const Poly t = Poly::monomial(fp, 1);
    for (std::size_t m = 0; m < n; ++m) {
        Poly next = (t - Poly::constant(fp, at(m, m))) * p[m];
        Elem prod = 1;
        for (std::size_t i = m; i-- > 0;) {
            prod = f.mul(prod, at(i + 1, i));
            if (prod == 0) break;
            Elem coef = f.mul(at(i, m), prod);
            if (coef != 0) next = next - p[i].scaled(coef);
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

Poly order_poly(std::span<const Elem> v, const Mat& x) {
    require_square(x, "order_poly");
    if (v.size() != x.dim()) throw DimensionError("order_poly: vector length mismatch");
    const Field& f = *x.field();
    const std::size_t n = x.dim(), w = 2 * n + 1;
    // Each stored row is [vector | coefficients of the polynomial p with vector = v p(X)].
    std::vector<std::vector<Elem>> rows;
    std::vector<std::size_t> pivots;
    std::vector<Elem> cur(w, 0);
    std::copy(v.begin(), v.end(), cur.begin());
    cur[n] = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t b = 0; b < rows.size(); ++b) {
            Elem c = cur[pivots[b]];
            if (c != 0) axpy_sub(cur.data(), rows[b].data(), c, w, f);
        }
        auto it = std::find_if(cur.begin(), cur.begin() + static_cast<long>(n), [](Elem e) { return e != 0; });
        if (it == cur.begin() + static_cast<long>(n)) {
            std::vector<Elem> coeffs(cur.begin() + static_cast<long>(n), cur.begin() + static_cast<long>(n + k + 1));
            return Poly(x.field(), std::move(coeffs)).monic();
        }
        std::size_t piv = static_cast<std::size_t>(it - cur.begin());
        scale(cur.data(), f.inv(cur[piv]), w, f);
        rows.push_back(cur);
        pivots.push_back(piv);
        // next = (stored vector) X, polynomial shifted by t
        std::vector<Elem> nxt(w, 0);
        Vec prod = vec_mul(std::span<const Elem>(cur.data(), n), x, f);
        std::copy(prod.begin(), prod.end(), nxt.begin());
        for (std::size_t i = 0; i + 1 < n + 1; ++i) nxt[n + 1 + i] = cur[n + i];
        cur = std::move(nxt);
    }
    throw std::logic_error("order_poly: Krylov sequence did not terminate");
}

Poly min_poly(const Mat& x) {
    require_square(x, "min_poly");
    Poly m = Poly::constant(x.field(), 1);
    for (std::size_t i = 0; i < x.dim(); ++i) {
        m = lcm(m, order_poly(unit_vector(x.dim(), i), x));
        if (static_cast<std::size_t>(m.degree()) == x.dim()) break;
    }
    return m;
}

bool is_cyclic(const Mat& x) {
    require_square(x, "is_cyclic");
    return static_cast<std::size_t>(min_poly(x).degree()) == x.dim();
}

Subspace krylov_span(std::span<const Elem> v, const Mat& x) {
    require_square(x, "krylov_span");
    if (v.size() != x.dim()) throw DimensionError("krylov_span: vector length mismatch");
    Subspace s(x.field(), x.dim());
    Vec cur(v.begin(), v.end());
    while (s.insert(cur)) cur = vec_mul(cur, x, *x.field());
    return s;
}

Subspace left_kernel(const Mat& m) {
    // v M = 0  <=>  M^T v^T = 0; row-reduce M^T and read off the null space.
    const Field& f = *m.field();
    const std::size_t rows = m.cols(), cols = m.rows();
    std::vector<Elem> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(j, i);
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        scale(&a[r * cols], f.inv(a[r * cols + c]), cols, f);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Elem e = a[i * cols + c];
            if (e != 0) axpy_sub(&a[i * cols], &a[r * cols], e, cols, f);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    Subspace ker(m.field(), cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = f.neg(a[i * cols + free]);
        ker.insert(std::move(v));
    }
    return ker;
}

Subspace kernel_of_poly(const Poly& p, const Mat& x) { return left_kernel(poly_eval(p, x)); }

// --- CyclicKernel -------------------------------------------------------------

CyclicKernel::CyclicKernel(FieldPtr f, std::size_t n)
    : field_(std::move(f)),
      n_(n),
      width_(2 * n + 1),
      rows_(n * (2 * n + 1)),
      pivot_(n),
      work_(2 * n + 1),
      next_(2 * n + 1),
      power_(n * n),
      power_next_(n * n),
      prow_((n + 1) * (n * n + n + 1)),
      ppivot_(n + 1) {}

CyclicKernel::Result CyclicKernel::test(const Mat& x) { return test(std::span<const Elem>(x.entries())); }

CyclicKernel::Result CyclicKernel::test(std::span<const Elem> x) {
    const Field& f = *field_;
    const std::size_t n = n_, w = width_;
    if (x.size() != n * n) throw DimensionError("CyclicKernel: matrix size mismatch");
    const std::size_t candidates = std::min<std::size_t>(n, 3);
    for (std::size_t cand = 0; cand < candidates; ++cand) {
        std::fill(work_.begin(), work_.end(), 0);
        work_[n - 1 - cand] = 1;
        work_[n] = 1;
        std::size_t dim = 0;
        for (;;) {
            Elem* cur = work_.data();
            for (std::size_t b = 0; b < dim; ++b) {
                Elem c = cur[pivot_[b]];
                if (c != 0) axpy_sub(cur, &rows_[b * w], c, w, f);
            }
            std::size_t piv = 0;
            while (piv < n && cur[piv] == 0) ++piv;
            if (piv == n) break;  // dependent: order polynomial has degree dim < n
            scale(cur, f.inv(cur[piv]), w, f);
            std::copy(cur, cur + w, &rows_[dim * w]);
            pivot_[dim] = piv;
            ++dim;
            if (dim == n) {
                // One more step gives the relation of degree n: the char poly.
                std::fill(next_.begin(), next_.end(), 0);
                for (std::size_t i = 0; i < n; ++i) {
                    Elem s = cur[i];
                    if (s == 0) continue;
                    const Elem* row = &x[i * n];
                    for (std::size_t j = 0; j < n; ++j)
                        if (row[j] != 0) next_[j] = f.add(next_[j], f.mul(s, row[j]));
                }
                for (std::size_t i = 0; i < n; ++i) next_[n + 1 + i] = cur[n + i];
                for (std::size_t b = 0; b < n; ++b) {
                    Elem c = next_[pivot_[b]];
                    if (c != 0) axpy_sub(next_.data(), &rows_[b * w], c, w, f);
                }
                // next_ vector part is now zero; coefficients give c(t) up to scale.
                const Elem lead_inv = f.inv(next_[2 * n]);
                std::uint64_t idx = 0;
                for (std::size_t i = n; i-- > 0;) idx = idx * f.q() + f.mul(next_[n + i], lead_inv);
                return {true, idx};
            }
            std::fill(next_.begin(), next_.end(), 0);
            for (std::size_t i = 0; i < n; ++i) {
                Elem s = cur[i];
                if (s == 0) continue;
                const Elem* row = &x[i * n];
                for (std::size_t j = 0; j < n; ++j)
                    if (row[j] != 0) next_[j] = f.add(next_[j], f.mul(s, row[j]));
            }
            for (std::size_t i = 0; i + 1 < n + 1; ++i) next_[n + 1 + i] = cur[n + i];
            std::swap(work_, next_);
        }
    }
    return test_by_powers(x);
}

CyclicKernel::Result CyclicKernel::test_by_powers(std::span<const Elem> x) {
    const Field& f = *field_;
    const std::size_t n = n_, nn = n * n, w = nn + n + 1;
    std::fill(power_.begin(), power_.end(), 0);
    for (std::size_t i = 0; i < n; ++i) power_[i * n + i] = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        Elem* cur = &prow_[k * w];
        std::copy(power_.begin(), power_.end(), cur);
        std::fill(cur + nn, cur + w, 0);
        cur[nn + k] = 1;
        for (std::size_t b = 0; b < k; ++b) {
            Elem c = cur[ppivot_[b]];
            if (c != 0) axpy_sub(cur, &prow_[b * w], c, w, f);
        }
        std::size_t piv = 0;
        while (piv < nn && cur[piv] == 0) ++piv;
        if (piv == nn) {
            // sum_i cur[nn+i] X^i = 0 is the minimal relation
            if (k < n) return {false, 0};
            const Elem lead_inv = f.inv(cur[nn + n]);
            std::uint64_t idx = 0;
            for (std::size_t i = n; i-- > 0;) idx = idx * f.q() + f.mul(cur[nn + i], lead_inv);
            return {true, idx};
        }
        scale(cur, f.inv(cur[piv]), w, f);
        ppivot_[k] = piv;
        if (k == n) break;
        std::fill(power_next_.begin(), power_next_.end(), 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                const Elem a = power_[i * n + l];
                if (a == 0) continue;
                const Elem* row = &x[l * n];
                Elem* out = &power_next_[i * n];
                for (std::size_t j = 0; j < n; ++j)
                    if (row[j] != 0) out[j] = f.add(out[j], f.mul(a, row[j]));
            }
        std::swap(power_, power_next_);
    }
    throw std::logic_error("CyclicKernel: no relation of degree <= n");
}

}  // namespace redcyc
