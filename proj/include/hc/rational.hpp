#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace hc {

/// Exact rational scalar. GMP keeps every value in lowest terms.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = Matrix<Rational>;
using Vec = Vector<Rational>;
using Index = Eigen::Index;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else or q == 0.
Rational parse_rational(std::string_view text);

inline Mat zeros(Index rows, Index cols) { return Mat::Zero(rows, cols); }
inline Mat identity(Index n) { return Mat::Identity(n, n); }

}  // namespace hc
