#ifndef REDCYC_TESTS_SUPPORT_HPP
#define REDCYC_TESTS_SUPPORT_HPP

#include "oracles.hpp"
#include "redcyc/matrix.hpp"
#include "redcyc/rng.hpp"

namespace testing_support {

inline redcyc::Mat random_mat(const redcyc::FieldPtr& f, std::size_t rows, std::size_t cols, redcyc::Rng& rng) {
    redcyc::Mat m(f, rows, cols);
    for (auto& e : m.entries()) e = static_cast<redcyc::Elem>(rng.below(f->q()));
    return m;
}

inline oracle::Mat to_oracle(const redcyc::Mat& m) {
    oracle::Mat o(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) o[i][j] = static_cast<int>(m(i, j));
    return o;
}

inline redcyc::Mat from_oracle(const redcyc::FieldPtr& f, const oracle::Mat& o) {
    redcyc::Mat m(f, o.size(), o.empty() ? 0 : o[0].size());
    for (std::size_t i = 0; i < o.size(); ++i)
        for (std::size_t j = 0; j < o[i].size(); ++j) m.set(i, j, static_cast<redcyc::Elem>(o[i][j]));
    return m;
}

inline std::vector<redcyc::Elem> coeffs(const oracle::Poly& p) { return {p.begin(), p.end()}; }

}  // namespace testing_support

#endif
