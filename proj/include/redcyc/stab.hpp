#ifndef REDCYC_STAB_HPP
#define REDCYC_STAB_HPP

#include <cstddef>

#include "redcyc/matrix.hpp"
#include "redcyc/rng.hpp"

namespace redcyc {

enum class Mode { algebra, group };

const char* to_string(Mode m) noexcept;
Mode parse_mode(std::string_view s);

/// Element of the stabilizer M(V)_U of U = <e_1, ..., e_r> in block form
///
///     X = ( A  0 )      A : r x r,  B : (n-r) x (n-r),  C : (n-r) x r
///         ( C  B )
///
/// With row vectors acting on the left, UX lies in U exactly when the
/// top-right block vanishes.
struct StabMat {
    std::size_t n;
    std::size_t r;
    Mat A;
    Mat B;
    Mat C;

    StabMat(Mat a, Mat b, Mat c);

    const FieldPtr& field() const noexcept { return A.field(); }
};

Mat stab_embed(const StabMat& s);
/// Throws DimensionError if X does not stabilize <e_1..e_r>.
StabMat stab_project(const Mat& x, std::size_t r);

/// Uniform element of M(V)_U (algebra) or GL(V)_U (group; rejection on
/// det A * det B != 0).
StabMat stab_sample(std::size_t n, std::size_t r, const FieldPtr& f, Rng& rng, Mode mode);

/// The witness diag(C(g), C(f), C(f), C(h)) with r = deg g + deg f and
/// n - r = deg f + deg h.  A degree-0 g or h contributes no block.
/// Requires f irreducible, g and h monic, gcd(f, gh) = gcd(g, h) = 1, and
/// re-checks that the result is non-cyclic with cyclic diagonal blocks.
StabMat build_xfgh(const Poly& f, const Poly& g, const Poly& h);

}  // namespace redcyc

#endif
