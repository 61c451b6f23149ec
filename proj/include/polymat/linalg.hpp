#pragma once

#include "polymat/errors.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <utility>

namespace polymat::linalg {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<std::int64_t>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Thrown by the checked int64 Bareiss step; the caller retries in BigInt.
struct Int64Overflow {};

namespace detail {

/// One Bareiss update: (pivot * a - b * c) / previous_pivot, which divides exactly.
template <typename Scalar>
struct BareissStep {
  static Scalar apply(const Scalar& pivot, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& prev) {
    return (pivot * a - b * c) / prev;
  }
};

template <>
struct BareissStep<std::int64_t> {
  static std::int64_t apply(std::int64_t pivot, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t prev) {
    const __int128 value = (static_cast<__int128>(pivot) * a - static_cast<__int128>(b) * c) / prev;
    if (value > INT64_MAX || value < INT64_MIN) throw Int64Overflow{};
    return static_cast<std::int64_t>(value);
  }
};

}  // namespace detail

/// Rank over the rationals by fraction-free (Bareiss) elimination. Works
/// in place on `m`; entries stay integral throughout.
template <typename Scalar>
Eigen::Index bareiss_rank(Matrix<Scalar>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Scalar prev(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (m(r, col) != Scalar(0)) {
        pivot_row = r;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));
    const Scalar pivot = m(rank, col);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col + 1; c < cols; ++c)
        m(r, c) = detail::BareissStep<Scalar>::apply(pivot, m(r, c), factor, m(rank, c), prev);
      m(r, col) = Scalar(0);
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

/// Exact rank over Q: checked int64 first, arbitrary precision on overflow.
inline Eigen::Index rational_rank(const IntMatrix& m) {
  IntMatrix work = m;
  try {
    return bareiss_rank(work);
  } catch (const Int64Overflow&) {
    Matrix<BigInt> big = m.cast<BigInt>();
    return bareiss_rank(big);
  }
}

/// Rank over the prime field Z/p.
inline Eigen::Index modular_rank(const IntMatrix& m, std::int64_t p) {
  auto reduce = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto inverse = [p](std::int64_t a) {
    std::int64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = static_cast<std::int64_t>(static_cast<__int128>(result) * base % p);
      base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p);
      e >>= 1;
    }
    return result;
  };
  IntMatrix work = m.unaryExpr(reduce);
  const Eigen::Index rows = work.rows(), cols = work.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (work(r, col) != 0) {
        pivot_row = r;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) work.row(pivot_row).swap(work.row(rank));
    const std::int64_t inv = inverse(work(rank, col));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (work(r, col) == 0) continue;
      const std::int64_t factor = static_cast<std::int64_t>(static_cast<__int128>(work(r, col)) * inv % p);
      for (Eigen::Index c = col; c < cols; ++c)
        work(r, c) = reduce(work(r, c) - static_cast<std::int64_t>(static_cast<__int128>(factor) * work(rank, c) % p));
    }
    ++rank;
  }
  return rank;
}

bool is_prime(std::int64_t p);

/// Rank over the prime field of characteristic `characteristic` (0 = Q).
inline Eigen::Index rank(const IntMatrix& m, std::int64_t characteristic) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (characteristic == 0) return rational_rank(m);
  return modular_rank(m, characteristic);
}

/// Throws DomainError unless `characteristic` is 0 or a prime.
void check_characteristic(std::int64_t characteristic);

}  // namespace polymat::linalg
