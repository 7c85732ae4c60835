#pragma once

// Multivariate polynomials over Q and a plain Buchberger engine.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagdeg/errors.hpp"
#include "flagdeg/exact.hpp"

namespace flagdeg {

using Monomial = std::vector<int>;

enum class OrderKind { Grevlex, Lex, Block };

/// Variables are listed from least to most significant: the last variable is
/// the largest. Block(k) compares the last k variables first (grevlex), then
/// the rest (grevlex); it eliminates those k variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder eliminate_last(int k) { return {OrderKind::Block, k}; }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Ring {
 public:
  Ring(std::vector<std::string> vars, MonomialOrder order = {}) : vars_(std::move(vars)), order_(order) {
    std::set<std::string> seen(vars_.begin(), vars_.end());
    if (seen.size() != vars_.size()) throw InvalidInput("Ring: duplicate variable name");
    if (order_.kind == OrderKind::Block && (order_.block < 0 || order_.block > size()))
      throw InvalidInput("Ring: bad block size");
  }

  int size() const noexcept { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<int> index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  /// <0, 0, >0 as a is smaller than, equal to, larger than b.
  int compare(const Monomial& a, const Monomial& b) const {
    const int n = size();
    switch (order_.kind) {
      case OrderKind::Lex:
        for (int i = n - 1; i >= 0; --i)
          if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
      case OrderKind::Grevlex:
        return grevlex(a, b, 0, n);
      case OrderKind::Block: {
        if (int c = grevlex(a, b, n - order_.block, n)) return c;
        return grevlex(a, b, 0, n - order_.block);
      }
    }
    return 0;
  }

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_ && a.order_ == b.order_; }

 private:
  // Grevlex on variables [lo, hi), variable hi-1 most significant.
  static int grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }

  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order = {}) {
  return std::make_shared<const Ring>(std::move(vars), order);
}

struct Term {
  Monomial m;
  Rational c;
};

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}
inline Monomial quotient(const Monomial& a, const Monomial& b) {  // a / b
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

/// Terms are kept sorted by decreasing monomial with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial(ring->size(), 0), c});
    return p;
  }
  static Polynomial variable(RingPtr ring, int i) {
    Polynomial p(ring);
    Monomial m(ring->size(), 0);
    m.at(i) = 1;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
  }
  static Polynomial variable(RingPtr ring, std::string_view name) {
    auto i = ring->index_of(name);
    if (!i) throw InvalidInput("unknown variable '" + std::string(name) + "'");
    return variable(std::move(ring), *i);
  }
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_[0].m.begin(), terms_[0].m.end(),
                                                                [](int e) { return e == 0; }));
  }
  const Term& leading_term() const {
    if (terms_.empty()) throw InvalidInput("leading_term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().m; }
  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) {
      int s = 0;
      for (int e : t.m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial p(*this);
    const Rational lc = terms_.front().c;
    for (auto& t : p.terms_) t.c /= lc;
    return p;
  }

  /// this - c * m * g
  Polynomial minus_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
    check_ring(g);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    const std::size_t n = m.size();
    Monomial shifted(n);
    auto shift = [&](const Monomial& x) {
      for (std::size_t k = 0; k < n; ++k) shifted[k] = x[k] + m[k];
    };
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.terms_.push_back(terms_[i++]);
        continue;
      }
      shift(g.terms_[j].m);
      const int cmp = i == terms_.size() ? -1 : ring_->compare(terms_[i].m, shifted);
      if (cmp > 0) {
        out.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        out.terms_.push_back({shifted, -c * g.terms_[j].c});
        ++j;
      } else {
        Rational s = terms_[i].c - c * g.terms_[j].c;
        if (s != 0) out.terms_.push_back({shifted, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return a.minus_scaled(Rational(-1), Monomial(a.ring_->size(), 0), b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a.minus_scaled(Rational(1), Monomial(a.ring_->size(), 0), b);
  }
  Polynomial operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial out(a.ring_);
    for (const auto& t : b.terms_) out = out.minus_scaled(-t.c, t.m, a);
    return out;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) {
    if (c == 0) return Polynomial(a.ring_);
    Polynomial p(a);
    for (auto& t : p.terms_) t.c *= c;
    return p;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw InvalidInput("negative exponent");
    Polynomial r = constant(ring_, 1);
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
      if (a.terms_[k].m != b.terms_[k].m || a.terms_[k].c != b.terms_[k].c) return false;
    return true;
  }

  /// Same polynomial in another ring with the same variable names (possibly
  /// reordered or extended). Throws if a used variable is missing.
  Polynomial in_ring(const RingPtr& target) const {
    std::vector<int> map(ring_->size());
    for (int i = 0; i < ring_->size(); ++i) {
      auto j = target->index_of(ring_->variables()[i]);
      map[i] = j ? *j : -1;
    }
    Polynomial out(target);
    for (const auto& t : terms_) {
      Monomial m(target->size(), 0);
      for (int i = 0; i < ring_->size(); ++i) {
        if (!t.m[i]) continue;
        if (map[i] < 0) throw InvalidInput("in_ring: variable " + ring_->variables()[i] + " missing from target");
        m[map[i]] = t.m[i];
      }
      out = out + monomial(target, std::move(m), t.c);
    }
    return out;
  }

  /// Terms in decreasing order, e.g. "x21*x32 - 2*x31".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& t = terms_[k];
      Rational c = t.c;
      if (k == 0) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      c = abs(c);
      std::string mono;
      for (int i = 0; i < ring_->size(); ++i) {
        if (!t.m[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_->variables()[i];
        if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
      }
      if (mono.empty()) {
        s += c.get_str();
      } else {
        if (c != 1) s += c.get_str() + "*";
        s += mono;
      }
    }
    return s;
  }

  void check_ring(const Polynomial& other) const {
    if (ring_ != other.ring_ && !(ring_ && other.ring_ && *ring_ == *other.ring_))
      throw InvalidInput("polynomial ring mismatch");
  }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

/// Parses sums of products of rational numbers, variables, powers and
/// parenthesised subexpressions, e.g. "x21*x32 - 2*x31", "(x21+1)^2", "3/2*x31".
inline Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw InvalidInput("parse_polynomial: " + why + " at offset " + std::to_string(pos) + " in '" +
                       std::string(text) + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto peek = [&]() -> char {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  };
  auto integer = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::string(text.substr(start, pos - start));
  };

  std::function<Polynomial()> expr;
  std::function<Polynomial()> primary = [&]() -> Polynomial {
    const char c = peek();
    if (c == '(') {
      ++pos;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = integer();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        num += "/" + integer();
      }
      Rational q(num);
      if (q.get_den() == 0) fail("zero denominator");
      q.canonicalize();
      return Polynomial::constant(ring, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
      const std::string name(text.substr(start, pos - start));
      if (!ring->index_of(name)) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring, name);
    }
    fail("unexpected character");
    return Polynomial(ring);
  };
  auto factor = [&]() -> Polynomial {
    bool neg = false;
    while (peek() == '-' || peek() == '+') {
      neg ^= text[pos] == '-';
      ++pos;
    }
    Polynomial p = primary();
    if (peek() == '^') {
      ++pos;
      skip();
      p = p.pow(std::stoi(integer()));
    }
    return neg ? -p : p;
  };
  auto term = [&]() -> Polynomial {
    Polynomial p = factor();
    while (peek() == '*') {
      ++pos;
      p = p * factor();
    }
    return p;
  };
  expr = [&]() -> Polynomial {
    Polynomial p = term();
    while (true) {
      const char c = peek();
      if (c == '+') {
        ++pos;
        p = p + term();
      } else if (c == '-') {
        ++pos;
        p = p - term();
      } else {
        break;
      }
    }
    return p;
  };
  Polynomial p = expr();
  if (peek() != '\0') fail("trailing input");
  return p;
}

/// Optional wall-clock limit for Groebner computations.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(double seconds) {
    Deadline d;
    if (seconds > 0)
      d.at_ = std::chrono::steady_clock::now() +
              std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    return d;
  }
  void check(const char* what) const {
    if (at_ && std::chrono::steady_clock::now() > *at_) throw Timeout(std::string(what) + ": time limit exceeded");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;

  static Ideal parse(const RingPtr& ring, const std::vector<std::string>& gens) {
    Ideal I{ring, {}};
    for (const auto& g : gens) I.generators.push_back(parse_polynomial(ring, g));
    return I;
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < generators.size(); ++k) s += (k ? ", " : "") + generators[k].str();
    return s + ")";
  }
};

/// Full reduction of f by G (division remainder).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  for (const auto& g : G) f.check_ring(g);
  Polynomial p = f;
  Polynomial r(f.ring());
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* div = nullptr;
    for (const auto& g : G)
      if (!g.is_zero() && divides(g.leading_monomial(), lt.m)) {
        div = &g;
        break;
      }
    if (div) {
      p = p.minus_scaled(lt.c / div->leading_term().c, quotient(lt.m, div->leading_monomial()), *div);
    } else {
      r = r + Polynomial::monomial(f.ring(), lt.m, lt.c);
      p = p.minus_scaled(Rational(1), Monomial(f.ring()->size(), 0), Polynomial::monomial(f.ring(), lt.m, lt.c));
    }
  }
  return r;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial a = f.monic(), b = g.monic();
  Polynomial zero(f.ring());
  return zero.minus_scaled(Rational(-1), quotient(l, a.leading_monomial()), a)
      .minus_scaled(Rational(1), quotient(l, b.leading_monomial()), b);
}

/// Reduced Groebner basis: monic, minimal, tails reduced, sorted by
/// decreasing leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> basis;

  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero(); }
  bool contains(const Polynomial& f) const { return normal_form(f, basis).is_zero(); }
  std::string str() const { return Ideal{ring, basis}.str(); }
};

/// Buchberger's algorithm with the coprime-leading-monomial and chain
/// criteria and normal pair selection (smallest lcm first).
inline GroebnerBasis buchberger(const Ideal& I, const Deadline& deadline = {}) {
  const RingPtr& R = I.ring;
  std::vector<Polynomial> G;
  for (const auto& g : I.generators) {
    if (g.ring() != R && !(*g.ring() == *R)) throw InvalidInput("buchberger: generator from another ring");
    if (!g.is_zero()) G.push_back(g.monic());
  }
  if (G.empty()) return {R, {}};

  std::set<std::pair<int, int>> pending;
  for (int j = 0; j < static_cast<int>(G.size()); ++j)
    for (int i = 0; i < j; ++i) pending.emplace(i, j);
  auto pair_lcm = [&](const std::pair<int, int>& p) { return lcm(G[p.first].leading_monomial(), G[p.second].leading_monomial()); };

  while (!pending.empty()) {
    deadline.check("buchberger");
    auto best = pending.begin();
    Monomial best_lcm = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = pair_lcm(*it);
      if (R->compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = G[i].leading_monomial();
    const Monomial& lj = G[j].leading_monomial();
    if (coprime(li, lj)) continue;  // criterion 1
    bool chain = false;             // criterion 2
    for (int k = 0; k < static_cast<int>(G.size()) && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!divides(G[k].leading_monomial(), best_lcm)) continue;
      const auto ik = std::minmax(i, k), jk = std::minmax(j, k);
      if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second})) chain = true;
    }
    if (chain) continue;

    Polynomial h = normal_form(s_polynomial(G[i], G[j]), G);
    if (h.is_zero()) continue;
    G.push_back(h.monic());
    const int n = static_cast<int>(G.size()) - 1;
    for (int k = 0; k < n; ++k) pending.emplace(k, n);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's (first occurrence wins on ties).
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = G[a].leading_monomial();
      const auto& lb = G[b].leading_monomial();
      if (divides(lb, la) && (la != lb || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[a]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    const Term lt = minimal[a].leading_term();
    Polynomial tail = minimal[a].minus_scaled(Rational(1), Monomial(R->size(), 0), Polynomial::monomial(R, lt.m, lt.c));
    reduced.push_back((Polynomial::monomial(R, lt.m, lt.c) + normal_form(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return R->compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return {R, std::move(reduced)};
}

inline bool membership(const Polynomial& f, const Ideal& I, const Deadline& deadline = {}) {
  return buchberger(I, deadline).contains(f);
}

namespace detail {

inline std::string fresh_name(const Ring& R, const std::string& base) {
  std::string name = base;
  while (R.index_of(name)) name += "_";
  return name;
}

}  // namespace detail

/// f in sqrt(I) iff 1 in I + (1 - y f) over Q[vars, y].
inline bool radical_membership(const Polynomial& f, const Ideal& I, const Deadline& deadline = {}) {
  std::vector<std::string> vars = I.ring->variables();
  vars.push_back(detail::fresh_name(*I.ring, "_y"));
  const RingPtr ext = make_ring(vars);
  Ideal J{ext, {}};
  for (const auto& g : I.generators) J.generators.push_back(g.in_ring(ext));
  J.generators.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, vars.size() - 1) * f.in_ring(ext));
  return buchberger(J, deadline).is_unit();
}

/// Formal partial derivative in variable i.
inline Polynomial partial_derivative(const Polynomial& f, int i) {
  Polynomial out(f.ring());
  for (const auto& t : f.terms()) {
    if (t.m.at(i) == 0) continue;
    Monomial m = t.m;
    --m[i];
    out = out + Polynomial::monomial(f.ring(), std::move(m), t.c * t.m[i]);
  }
  return out;
}

/// f with the listed variables set to zero.
inline Polynomial set_to_zero(const Polynomial& f, const std::vector<int>& vars) {
  Polynomial out(f.ring());
  for (const auto& t : f.terms())
    if (std::none_of(vars.begin(), vars.end(), [&](int i) { return t.m.at(i) != 0; }))
      out = out + Polynomial::monomial(f.ring(), t.m, t.c);
  return out;
}

/// I cap J by eliminating t from t I + (1 - t) J.
inline Ideal intersect(const Ideal& I, const Ideal& J, const Deadline& deadline = {}) {
  if (!(*I.ring == *J.ring)) throw InvalidInput("intersect: ring mismatch");
  std::vector<std::string> vars = I.ring->variables();
  vars.push_back(detail::fresh_name(*I.ring, "_t"));
  const RingPtr ext = make_ring(vars, MonomialOrder::eliminate_last(1));
  const Polynomial t = Polynomial::variable(ext, vars.size() - 1);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  Ideal K{ext, {}};
  for (const auto& g : I.generators) K.generators.push_back(t * g.in_ring(ext));
  for (const auto& g : J.generators) K.generators.push_back(one_minus_t * g.in_ring(ext));
  const GroebnerBasis gb = buchberger(K, deadline);
  Ideal out{I.ring, {}};
  for (const auto& g : gb.basis)
    if (std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& term) { return term.m.back() == 0; }))
      out.generators.push_back(g.in_ring(I.ring));
  return out;
}

inline Ideal intersect(const std::vector<Ideal>& ideals, const Deadline& deadline = {}) {
  if (ideals.empty()) throw InvalidInput("intersect: no ideals");
  Ideal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc, ideals[k], deadline);
  return acc;
}

/// Every generator of I lies in J.
inline bool ideal_contains(const Ideal& J, const Ideal& I, const Deadline& deadline = {}) {
  const GroebnerBasis gb = buchberger(J, deadline);
  return std::all_of(I.generators.begin(), I.generators.end(), [&](const Polynomial& f) { return gb.contains(f); });
}

inline bool ideal_equal(const Ideal& I, const Ideal& J, const Deadline& deadline = {}) {
  return ideal_contains(I, J, deadline) && ideal_contains(J, I, deadline);
}

}  // namespace flagdeg
