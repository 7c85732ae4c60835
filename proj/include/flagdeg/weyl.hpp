#pragma once

// Weyl group elements as integer matrices acting on root-lattice
// coordinates (column j is the image of a_j).

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "flagdeg/errors.hpp"
#include "flagdeg/exact.hpp"
#include "flagdeg/rootsys.hpp"

namespace flagdeg {

/// A sequence of simple-reflection indices in [1, n].
struct Word {
  std::vector<int> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  int operator[](std::size_t k) const { return letters[k]; }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// "(1,2,1)"; the empty word prints as "()".
inline std::string to_string(const Word& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(w[k]);
  }
  return s + ")";
}

/// Immutable group element; equality is matrix equality.
class WeylElement {
 public:
  WeylElement() = default;

  const IntMatrix& matrix() const noexcept { return m_; }
  int length() const noexcept { return length_; }
  int rank() const noexcept { return m_.size(); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m_ == b.m_; }
  /// Deterministic total order: by length, then lexicographic matrix.
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.m_ <=> b.m_;
  }

 private:
  friend class WeylGroup;
  WeylElement(IntMatrix m, int length) : m_(std::move(m)), length_(length) {}

  IntMatrix m_;
  int length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return IntMatrixHash{}(w.matrix()); }
};

/// Group operations over a shared root system. Cheap to copy.
class WeylGroup {
 public:
  explicit WeylGroup(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) { init_inverse_form(); }
  explicit WeylGroup(const CartanType& t) : WeylGroup(std::make_shared<const RootSystem>(t)) {}
  explicit WeylGroup(std::string_view t) : WeylGroup(CartanType::parse(t)) {}

  const RootSystem& root_system() const noexcept { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const noexcept { return rs_; }
  int rank() const noexcept { return rs_->rank(); }

  WeylElement identity() const { return WeylElement(IntMatrix::identity(rank()), 0); }

  WeylElement simple_reflection(int i) const {
    rs_->check_index(i);
    IntMatrix m = IntMatrix::identity(rank());
    // s_i(a_j) = a_j - c_ij a_i
    for (int j = 0; j < rank(); ++j) m(i - 1, j) -= rs_->cartan()(i - 1, j);
    return WeylElement(std::move(m), 1);
  }

  /// s_beta for an arbitrary root beta.
  WeylElement reflection(const Root& beta) const {
    IntMatrix m(rank());
    for (int j = 1; j <= rank(); ++j) {
      const Coords img = rs_->reflect(beta, rs_->simple_root(j).coords);
      for (int r = 0; r < rank(); ++r) m(r, j - 1) = img[r];
    }
    return make(std::move(m));
  }

  /// Wraps a matrix assumed to lie in W, computing its length.
  WeylElement make(IntMatrix m) const {
    if (m.size() != rank()) throw InvalidInput("WeylGroup::make: rank mismatch");
    const int len = count_negated(m);
    return WeylElement(std::move(m), len);
  }

  /// True iff the matrix maps every root to a root.
  bool permutes_roots(const IntMatrix& m) const {
    if (m.size() != rank()) return false;
    for (const auto& r : rs_->positive_roots())
      if (!rs_->is_root(m.apply(r.coords))) return false;
    return true;
  }

  WeylElement multiply(const WeylElement& a, const WeylElement& b) const {
    check(a);
    check(b);
    return make(a.matrix() * b.matrix());
  }

  /// Uses invariance of the form: w^{-1} = B^{-1} w^T B.
  WeylElement inverse(const WeylElement& a) const {
    check(a);
    const IntMatrix t = binv_scaled_ * a.matrix().transpose() * rs_->form();
    IntMatrix m(rank());
    for (int r = 0; r < rank(); ++r)
      for (int c = 0; c < rank(); ++c) {
        if (t(r, c) % binv_den_ != 0) throw VerificationFailure("inverse: non-integral result");
        m(r, c) = t(r, c) / binv_den_;
      }
    return WeylElement(std::move(m), a.length());
  }

  Root act(const WeylElement& a, const Root& r) const {
    check(a);
    return Root{a.matrix().apply(r.coords)};
  }

  int length(const WeylElement& a) const { return a.length(); }

  /// Positive roots sent to negative roots by w^{-1}; |set| = l(w).
  std::vector<Root> inversion_set(const WeylElement& a) const {
    const WeylElement inv = inverse(a);
    std::vector<Root> out;
    for (const auto& r : rs_->positive_roots())
      if (!Root{inv.matrix().apply(r.coords)}.is_positive()) out.push_back(r);
    return out;
  }

  /// l(w s_i) < l(w), i.e. w(a_i) < 0.
  bool is_right_descent(const WeylElement& a, int i) const {
    rs_->check_index(i);
    for (int r = 0; r < rank(); ++r)
      if (a.matrix()(r, i - 1) < 0) return true;
    return false;
  }

  /// l(s_i w) < l(w), i.e. w^{-1}(a_i) < 0.
  bool is_left_descent(const WeylElement& a, int i) const { return is_right_descent(inverse(a), i); }

  /// Reduced word built by repeatedly stripping the smallest left descent.
  Word reduced_word(const WeylElement& a) const {
    check(a);
    IntMatrix u = inverse(a).matrix();
    Word w;
    while (true) {
      int desc = 0;
      for (int i = 1; i <= rank() && !desc; ++i)
        for (int r = 0; r < rank(); ++r)
          if (u(r, i - 1) < 0) {
            desc = i;
            break;
          }
      if (!desc) break;
      w.letters.push_back(desc);
      right_multiply_simple(u, desc);
    }
    if (static_cast<int>(w.size()) != a.length()) throw VerificationFailure("reduced_word: length mismatch");
    return w;
  }

  WeylElement from_word(const Word& w) const {
    IntMatrix m = IntMatrix::identity(rank());
    for (int i : w.letters) {
      rs_->check_index(i);
      right_multiply_simple(m, i);
    }
    return make(std::move(m));
  }

  bool is_reduced(const Word& w) const { return from_word(w).length() == static_cast<int>(w.size()); }

  /// beta_k = s_{i_1}...s_{i_{k-1}}(a_{i_k}) for a reduced word.
  std::vector<Root> roots_of_word(const Word& w) const {
    if (!is_reduced(w)) throw InvalidInput("roots_of_word: word " + to_string(w) + " is not reduced");
    std::vector<Root> out;
    IntMatrix prefix = IntMatrix::identity(rank());
    for (int i : w.letters) {
      out.push_back(Root{prefix.column(i - 1)});
      right_multiply_simple(prefix, i);
    }
    return out;
  }

  /// n - dim Ker(w - 1).
  int reflection_length(const WeylElement& a) const {
    check(a);
    return rank() - kernel_dim(a.matrix() - IntMatrix::identity(rank()));
  }

  bool is_involution(const WeylElement& a) const { return (a.matrix() * a.matrix()).is_identity(); }

  /// The unique element sending every simple root to a negative root.
  WeylElement longest_element() const {
    IntMatrix m = IntMatrix::identity(rank());
    while (true) {
      int asc = 0;
      for (int i = 1; i <= rank() && !asc; ++i) {
        bool neg = false;
        for (int r = 0; r < rank(); ++r) neg = neg || m(r, i - 1) < 0;
        if (!neg) asc = i;
      }
      if (!asc) break;
      right_multiply_simple(m, asc);
    }
    return make(std::move(m));
  }

  /// In-place m <- m * s_i.
  void right_multiply_simple(IntMatrix& m, int i) const {
    const int n = rank();
    for (int j = 0; j < n; ++j) {
      if (j == i - 1) continue;
      const int c = rs_->cartan()(i - 1, j);
      if (c == 0) continue;
      for (int r = 0; r < n; ++r) m(r, j) -= c * m(r, i - 1);
    }
    for (int r = 0; r < n; ++r) m(r, i - 1) = -m(r, i - 1);
  }

  // --- one-line notation, type A_n only ---------------------------------

  bool is_type_a() const {
    const auto& comps = rs_->type().components();
    return comps.size() == 1 && comps[0].letter == 'A' &&
           rs_->cartan() == bourbaki_cartan(comps[0]).cartan;
  }

  /// Permutation w(1)..w(n+1), digits concatenated for n+1 <= 9,
  /// comma-separated otherwise.
  std::string one_line(const WeylElement& a) const {
    const std::vector<int> p = permutation(a);
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p.size() > 9 && k) s += ',';
      s += std::to_string(p[k]);
    }
    return s;
  }

  std::vector<int> permutation(const WeylElement& a) const {
    require_type_a();
    check(a);
    const int n = rank();
    std::vector<int> p(n + 1, 0);
    for (int i = 0; i < n; ++i) {
      // epsilon coordinates of w(a_{i+1}) = e_{w(i+1)} - e_{w(i+2)}
      int plus = -1, minus = -1;
      for (int k = 0; k <= n; ++k) {
        const int e = (k < n ? a.matrix()(k, i) : 0) - (k > 0 ? a.matrix()(k - 1, i) : 0);
        if (e == 1) plus = k;
        if (e == -1) minus = k;
      }
      if (plus < 0 || minus < 0) throw VerificationFailure("permutation: matrix is not in S_{n+1}");
      p[i] = plus + 1;
      p[i + 1] = minus + 1;
    }
    return p;
  }

  WeylElement from_permutation(const std::vector<int>& perm) const {
    require_type_a();
    const int n = rank();
    if (static_cast<int>(perm.size()) != n + 1) throw InvalidInput("permutation has wrong size");
    std::vector<int> sorted(perm);
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k <= n; ++k)
      if (sorted[k] != k + 1) throw InvalidInput("not a permutation of 1..n+1");
    // Strip left descents: i is one when i+1 precedes i.
    std::vector<int> p(perm);
    Word w;
    while (true) {
      std::vector<int> pos(n + 2);
      for (int k = 0; k <= n; ++k) pos[p[k]] = k;
      int desc = 0;
      for (int i = 1; i <= n && !desc; ++i)
        if (pos[i + 1] < pos[i]) desc = i;
      if (!desc) break;
      w.letters.push_back(desc);
      for (int& x : p) x = x == desc ? desc + 1 : x == desc + 1 ? desc : x;
    }
    return from_word(w);
  }

  WeylElement from_one_line(std::string_view text) const {
    std::vector<int> perm;
    if (text.find(',') != std::string_view::npos) {
      std::stringstream ss{std::string(text)};
      std::string tok;
      while (std::getline(ss, tok, ',')) perm.push_back(std::stoi(tok));
    } else {
      for (char ch : text) {
        if (ch < '1' || ch > '9') throw InvalidInput("bad one-line notation '" + std::string(text) + "'");
        perm.push_back(ch - '0');
      }
    }
    return from_permutation(perm);
  }

  void check(const WeylElement& a) const {
    if (a.rank() != rank()) throw InvalidInput("Weyl element rank mismatch");
  }

 private:
  void require_type_a() const {
    if (!is_type_a()) throw InvalidInput("one-line notation needs type A");
  }

  int count_negated(const IntMatrix& m) const {
    int len = 0;
    for (const auto& r : rs_->positive_roots()) {
      // Sign of the image: roots are all-nonnegative or all-nonpositive.
      long first = 0;
      for (int row = 0; row < rank() && first == 0; ++row) {
        long acc = 0;
        for (int c = 0; c < rank(); ++c) acc += static_cast<long>(m(row, c)) * r.coords[c];
        first = acc;
      }
      if (first < 0) ++len;
    }
    return len;
  }

  void init_inverse_form() {
    const int n = rank();
    // Gauss-Jordan on the Gram matrix over Q.
    std::vector<RationalVector> a(n, RationalVector(2 * n));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a[r][c] = rs_->form()(r, c);
      a[r][n + r] = 1;
    }
    for (int c = 0; c < n; ++c) {
      int p = c;
      while (sgn(a[p][c]) == 0) ++p;
      std::swap(a[p], a[c]);
      const Rational piv = a[c][c];
      for (auto& x : a[c]) x /= piv;
      for (int r = 0; r < n; ++r) {
        if (r == c || sgn(a[r][c]) == 0) continue;
        const Rational f = a[r][c];
        for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
      }
    }
    mpz_class den = 1;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) den = lcm(den, a[r][n + c].get_den());
    binv_den_ = static_cast<int>(den.get_si());
    binv_scaled_ = IntMatrix(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const Rational v = a[r][n + c] * den;
        binv_scaled_(r, c) = static_cast<int>(v.get_num().get_si());
      }
  }

  std::shared_ptr<const RootSystem> rs_;
  IntMatrix binv_scaled_;
  int binv_den_ = 1;
};

/// Every reduced word of w in lexicographic order.
inline std::vector<Word> all_reduced_words(const WeylGroup& g, const WeylElement& w) {
  if (w.length() == 0) return {Word{}};
  std::vector<Word> out;
  for (int i = 1; i <= g.rank(); ++i) {
    if (!g.is_left_descent(w, i)) continue;
    for (Word tail : all_reduced_words(g, g.multiply(g.simple_reflection(i), w))) {
      tail.letters.insert(tail.letters.begin(), i);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

}  // namespace flagdeg
