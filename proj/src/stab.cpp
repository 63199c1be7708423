#include "redcyc/stab.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace redcyc {

const char* to_string(Mode m) noexcept { return m == Mode::algebra ? "algebra" : "group"; }

Mode parse_mode(std::string_view s) {
    if (s == "algebra") return Mode::algebra;
    if (s == "group") return Mode::group;
    throw std::invalid_argument("unknown mode '" + std::string(s) + "' (expected algebra or group)");
}

StabMat::StabMat(Mat a, Mat b, Mat c) : n(0), r(0), A(std::move(a)), B(std::move(b)), C(std::move(c)) {
    if (!A.is_square() || !B.is_square()) throw DimensionError("StabMat: diagonal blocks must be square");
    r = A.dim();
    n = r + B.dim();
    if (r == 0 || B.dim() == 0) throw DimensionError("StabMat: need 0 < r < n");
    if (C.rows() != n - r || C.cols() != r) throw DimensionError("StabMat: C must be (n-r) x r");
    require_same_field(*A.field(), *B.field());
    require_same_field(*A.field(), *C.field());
}

Mat stab_embed(const StabMat& s) {
    Mat x(s.field(), s.n, s.n);
    for (std::size_t i = 0; i < s.r; ++i)
        for (std::size_t j = 0; j < s.r; ++j) x.set(i, j, s.A(i, j));
    for (std::size_t i = 0; i < s.n - s.r; ++i) {
        for (std::size_t j = 0; j < s.r; ++j) x.set(s.r + i, j, s.C(i, j));
        for (std::size_t j = 0; j < s.n - s.r; ++j) x.set(s.r + i, s.r + j, s.B(i, j));
    }
    return x;
}

StabMat stab_project(const Mat& x, std::size_t r) {
    if (!x.is_square()) throw DimensionError("stab_project: matrix must be square");
    const std::size_t n = x.dim();
    if (r == 0 || r >= n) throw DimensionError("stab_project: need 0 < r < n");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = r; j < n; ++j)
            if (x(i, j) != 0) throw DimensionError("stab_project: matrix does not stabilize U (top-right block nonzero)");
    Mat a(x.field(), r, r), b(x.field(), n - r, n - r), c(x.field(), n - r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a.set(i, j, x(i, j));
    for (std::size_t i = 0; i < n - r; ++i) {
        for (std::size_t j = 0; j < r; ++j) c.set(i, j, x(r + i, j));
        for (std::size_t j = 0; j < n - r; ++j) b.set(i, j, x(r + i, r + j));
    }
    return StabMat(std::move(a), std::move(b), std::move(c));
}

namespace {

void fill_uniform(Mat& m, Rng& rng, std::uint32_t q) {
    for (auto& e : m.entries()) e = static_cast<Elem>(rng.below(q));
}

}  // namespace

StabMat stab_sample(std::size_t n, std::size_t r, const FieldPtr& f, Rng& rng, Mode mode) {
    if (r == 0 || r >= n) throw DimensionError("stab_sample: need 0 < r < n");
    const std::uint32_t q = f->q();
    Mat a(f, r, r), b(f, n - r, n - r), c(f, n - r, r);
    // Each block is redrawn until invertible; the blocks are independent, so
    // this is the same distribution as rejecting the whole triple.
    do {
        fill_uniform(a, rng, q);
    } while (mode == Mode::group && det(a) == 0);
    do {
        fill_uniform(b, rng, q);
    } while (mode == Mode::group && det(b) == 0);
    fill_uniform(c, rng, q);
    return StabMat(std::move(a), std::move(b), std::move(c));
}

StabMat build_xfgh(const Poly& f, const Poly& g, const Poly& h) {
    require_same_field(*f.field(), *g.field());
    require_same_field(*f.field(), *h.field());
    if (f.degree() < 1 || !f.is_monic() || !is_irreducible(f)) throw std::invalid_argument("build_xfgh: f must be monic irreducible");
    if (!g.is_monic() || !h.is_monic()) throw std::invalid_argument("build_xfgh: g and h must be monic");
    if (!gcd(f, g * h).is_one()) throw std::invalid_argument("build_xfgh: gcd(f, gh) != 1");
    if (!gcd(g, h).is_one()) throw std::invalid_argument("build_xfgh: gcd(g, h) != 1");

    const Mat cf = companion(f);
    std::vector<Mat> top, bottom;
    if (g.degree() > 0) top.push_back(companion(g));
    top.push_back(cf);
    bottom.push_back(cf);
    if (h.degree() > 0) bottom.push_back(companion(h));
    Mat a = Mat::block_diag(top);
    Mat b = Mat::block_diag(bottom);
    Mat c(f.field(), b.dim(), a.dim());
    StabMat s(std::move(a), std::move(b), std::move(c));

    if (!is_cyclic(s.A) || !is_cyclic(s.B)) throw std::logic_error("build_xfgh: diagonal block is not cyclic");
    if (is_cyclic(stab_embed(s))) throw std::logic_error("build_xfgh: constructed matrix is cyclic");
    return s;
}

}  // namespace redcyc
