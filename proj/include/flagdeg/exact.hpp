#pragma once

// Exact scalars and small dense integer matrices.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "flagdeg/errors.hpp"

namespace flagdeg {

using Rational = mpq_class;
using Coords = std::vector<int>;
using RationalVector = std::vector<Rational>;

/// "p/q" with q > 0, or "p" when q == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline RationalVector to_rational(std::span<const int> v) {
  return RationalVector(v.begin(), v.end());
}

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const noexcept { return n_; }
  int& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  int operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const std::vector<int>& data() const noexcept { return a_; }

  Coords column(int c) const {
    Coords out(n_);
    for (int r = 0; r < n_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Coords apply(std::span<const int> x) const {
    if (static_cast<int>(x.size()) != n_) throw InvalidInput("IntMatrix::apply: dimension mismatch");
    Coords out(n_, 0);
    for (int r = 0; r < n_; ++r) {
      long acc = 0;
      for (int c = 0; c < n_; ++c) acc += static_cast<long>((*this)(r, c)) * x[c];
      out[r] = static_cast<int>(acc);
    }
    return out;
  }

  RationalVector apply(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != n_) throw InvalidInput("IntMatrix::apply: dimension mismatch");
    RationalVector out(n_, 0);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) out[r] += (*this)(r, c) * x[c];
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw InvalidInput("IntMatrix product: rank mismatch");
    IntMatrix out(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const int aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < a.n_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw InvalidInput("IntMatrix sum: rank mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }

  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw InvalidInput("IntMatrix difference: rank mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }

  IntMatrix transpose() const {
    IntMatrix t(n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_identity() const {
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.a_ <=> b.a_;
  }

 private:
  int n_ = 0;
  std::vector<int> a_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : m.data()) {
      h ^= static_cast<std::size_t>(v + 0x9e37);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Rank over Q by Gaussian elimination on exact rationals.
inline int rank(const std::vector<RationalVector>& rows_in) {
  std::vector<RationalVector> rows = rows_in;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (sgn(rows[i][c]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline int rank(const IntMatrix& m) {
  std::vector<RationalVector> rows(m.size(), RationalVector(m.size()));
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) rows[r][c] = m(r, c);
  return rank(rows);
}

/// Exact nullity of a square integer matrix.
inline int kernel_dim(const IntMatrix& m) { return m.size() - rank(m); }

}  // namespace flagdeg
