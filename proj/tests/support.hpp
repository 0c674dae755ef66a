#pragma once

#include "hc/rational.hpp"

#include <initializer_list>

namespace test {

/// Row-major literal: mat(2, 2, {1, 0, 0, 1}).
inline hc::Mat mat(hc::Index rows, hc::Index cols, std::initializer_list<hc::Rational> entries) {
    hc::Mat m(rows, cols);
    auto it = entries.begin();
    for (hc::Index i = 0; i < rows; ++i)
        for (hc::Index j = 0; j < cols; ++j) m(i, j) = *it++;
    return m;
}

inline hc::Rational q(long p, long d = 1) { return hc::Rational(p) / hc::Rational(d); }

}  // namespace test
