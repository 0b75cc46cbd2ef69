#include "polyomega/matrix.hpp"

namespace polyomega {

RatMat to_rational(const IntMat &m) {
    RatMat out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            out(r, c) = BigRat(m(r, c));
    return out;
}

RatVec to_rational(const IntVec &v) {
    RatVec out;
    out.reserve(v.size());
    for (const auto &x : v)
        out.emplace_back(x);
    return out;
}

RatVec apply_rational(const IntMat &v, const RatVec &x) {
    if (v.cols() != x.size())
        throw DimensionError("apply: " + std::to_string(v.cols()) + " columns vs vector of length " +
                             std::to_string(x.size()));
    RatVec out(v.rows());
    for (std::size_t k = 0; k < v.cols(); ++k) {
        if (x[k] == 0)
            continue;
        for (std::size_t i = 0; i < v.rows(); ++i)
            out[i] += v(i, k) * x[k];
    }
    return out;
}

} // namespace polyomega
