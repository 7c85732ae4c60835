#pragma once

// Deodhar's distinguished subwords and Kazhdan-Lusztig R-polynomials.

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagdeg/bruhat.hpp"
#include "flagdeg/enumerate.hpp"
#include "flagdeg/weyl.hpp"

namespace flagdeg {

/// Univariate polynomial in q with integer coefficients, lowest degree first.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPolynomial constant(long long a) { return QPolynomial({a}); }
  static QPolynomial q() { return QPolynomial({0, 1}); }
  static QPolynomial q_minus_one_pow(int k) {
    QPolynomial p = constant(1);
    for (int i = 0; i < k; ++i) p = p * QPolynomial({-1, 1});
    return p;
  }

  const std::vector<long long>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    std::vector<long long> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return QPolynomial(std::move(r));
  }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<long long> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return QPolynomial(std::move(r));
  }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// k if the polynomial is (q-1)^k.
  std::optional<int> as_q_minus_one_power() const {
    if (is_zero()) return std::nullopt;
    return *this == q_minus_one_pow(degree()) ? std::optional<int>(degree()) : std::nullopt;
  }

  /// "[c0, c1, ...]".
  std::string coefficient_list() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + std::to_string(c_[i]);
    return s + "]";
  }

  /// "(q-1)^k" when applicable, otherwise the expanded sum, highest degree first.
  std::string str() const {
    if (is_zero()) return "0";
    if (auto k = as_q_minus_one_power()) {
      if (*k == 0) return "1";
      return *k == 1 ? "q-1" : "(q-1)^" + std::to_string(*k);
    }
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      long long a = c_[i];
      if (a == 0) continue;
      if (!s.empty()) s += a < 0 ? "-" : "+";
      else if (a < 0) s += "-";
      a = a < 0 ? -a : a;
      if (i == 0 || a != 1) s += std::to_string(a);
      if (i > 0) s += i == 1 ? "q" : "q^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long long> c_;
};

struct DistinguishedSubword {
  Word host;
  SubwordPositions removed;
  std::vector<WeylElement> sigma;  // sigma_0 .. sigma_l
  int n_stat = 0;                  // removed positions
  int m_stat = 0;                  // kept positions where the length drops
};

/// sigma_j = s_{beta_{p_1}} ... s_{beta_{p_{l_j}}} w_{<=j}, l_j = #{p_k <= j}.
inline std::vector<WeylElement> sigma_trace(const WeylGroup& g, const Word& host, const SubwordPositions& removed) {
  const std::vector<Root> betas = g.roots_of_word(host);
  std::vector<WeylElement> out;
  IntMatrix prefix = IntMatrix::identity(g.rank());
  IntMatrix refl = IntMatrix::identity(g.rank());
  std::size_t r = 0;
  out.push_back(g.identity());
  for (std::size_t j = 1; j <= host.size(); ++j) {
    g.right_multiply_simple(prefix, host[j - 1]);
    if (r < removed.size() && removed.removed[r] == static_cast<int>(j)) {
      refl = refl * g.reflection(betas[j - 1]).matrix();
      ++r;
    }
    out.push_back(g.make(refl * prefix));
  }
  return out;
}

/// All distinguished subwords of `host` with value v, removal sets in
/// lexicographic order.
inline std::vector<DistinguishedSubword> distinguished_subwords(const WeylGroup& g, const Word& host,
                                                                const WeylElement& v) {
  if (!g.is_reduced(host)) throw InvalidInput("distinguished_subwords: word " + to_string(host) + " is not reduced");
  const int l = static_cast<int>(host.size());
  const int n = g.rank();
  std::vector<DistinguishedSubword> out;
  std::vector<int> removed;
  std::vector<IntMatrix> trace{IntMatrix::identity(n)};
  int m_stat = 0;
  auto descends = [n](const IntMatrix& m, int i) {
    for (int r = 0; r < n; ++r)
      if (m(r, i - 1) < 0) return true;
    return false;
  };
  std::function<void(int)> dfs = [&](int pos) {
    const IntMatrix& cur = trace.back();
    if (pos == l) {
      if (cur == v.matrix()) {
        DistinguishedSubword ds{host, SubwordPositions{removed}, {}, static_cast<int>(removed.size()), m_stat};
        ds.sigma = sigma_trace(g, host, ds.removed);
        for (std::size_t j = 0; j < trace.size(); ++j)
          if (ds.sigma[j].matrix() != trace[j])
            throw VerificationFailure("distinguished_subwords: sigma trace disagrees with kept prefix");
        out.push_back(std::move(ds));
      }
      return;
    }
    const int letter = host[pos];
    const bool down = descends(cur, letter);
    // Removing keeps sigma; allowed only when sigma s > sigma.
    if (!down) {
      removed.push_back(pos + 1);
      trace.push_back(cur);
      dfs(pos + 1);
      trace.pop_back();
      removed.pop_back();
    }
    IntMatrix next = trace.back();
    g.right_multiply_simple(next, letter);
    trace.push_back(std::move(next));
    if (down) ++m_stat;
    dfs(pos + 1);
    if (down) --m_stat;
    trace.pop_back();
  };
  dfs(0);
  return out;
}

/// The distinguished subword with m = 0.
inline DistinguishedSubword positive_subword(const WeylGroup& g, const Word& host, const WeylElement& v) {
  std::optional<DistinguishedSubword> found;
  for (auto& ds : distinguished_subwords(g, host, v))
    if (ds.m_stat == 0) {
      if (found) throw VerificationFailure("positive_subword: not unique");
      found = std::move(ds);
    }
  if (!found) throw InvalidInput("positive_subword: v is not below the word's value");
  return *found;
}

/// Sum of (q-1)^n q^m over distinguished subwords.
inline QPolynomial r_polynomial_deodhar(const WeylGroup& g, const Word& host, const WeylElement& v) {
  QPolynomial sum;
  for (const auto& ds : distinguished_subwords(g, host, v)) {
    QPolynomial term = QPolynomial::q_minus_one_pow(ds.n_stat);
    for (int k = 0; k < ds.m_stat; ++k) term = term * QPolynomial::q();
    sum = sum + term;
  }
  return sum;
}

inline QPolynomial r_polynomial_deodhar(const WeylGroup& g, const WeylElement& v, const WeylElement& w) {
  return r_polynomial_deodhar(g, g.reduced_word(w), v);
}

/// Memoized descent recurrence: for s a left descent of w,
/// R_{v,w} = R_{sv,sw} if sv < v, else (q-1) R_{v,sw} + q R_{sv,sw}.
/// Lookups and fills are guarded; concurrent fills of one entry are
/// idempotent.
class RPolynomialRecurrence {
 public:
  explicit RPolynomialRecurrence(std::shared_ptr<const BruhatOrder> order) : order_(std::move(order)) {}

  QPolynomial operator()(int v, int w) const {
    const EnumeratedGroup& G = order_->group();
    const long long key = static_cast<long long>(v) * G.size() + w;
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    QPolynomial r;
    if (!order_->leq(v, w)) {
      r = QPolynomial();
    } else if (w == 0) {
      r = QPolynomial::constant(1);
    } else {
      int s = 1;
      while (!G.is_left_descent(w, s)) ++s;
      const int sw = G.left_mul(s, w), sv = G.left_mul(s, v);
      if (G.is_left_descent(v, s))
        r = (*this)(sv, sw);
      else
        r = QPolynomial({-1, 1}) * (*this)(v, sw) + QPolynomial::q() * (*this)(sv, sw);
    }
    std::lock_guard lock(mutex_);
    memo_.emplace(key, r);
    return r;
  }

  QPolynomial operator()(const WeylElement& v, const WeylElement& w) const {
    return (*this)(order_->group().id_of(v), order_->group().id_of(w));
  }

 private:
  std::shared_ptr<const BruhatOrder> order_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<long long, QPolynomial> memo_;
};

}  // namespace flagdeg
