#pragma once

// Parabolic quotients W^P, the P-Bruhat order and GCR_P.

#include <algorithm>
#include <compare>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flagdeg/bruhat.hpp"
#include "flagdeg/gcr.hpp"

namespace flagdeg {

/// Simple indices generating W_P.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  ParabolicSubset(int rank, std::vector<int> indices) : rank_(rank), j_(std::move(indices)) {
    std::sort(j_.begin(), j_.end());
    j_.erase(std::unique(j_.begin(), j_.end()), j_.end());
    for (int i : j_)
      if (i < 1 || i > rank_) throw InvalidInput("ParabolicSubset: index " + std::to_string(i) + " out of range");
  }
  /// "1,3"; empty string gives the empty subset.
  static ParabolicSubset parse(int rank, const std::string& text) {
    std::vector<int> idx;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      try {
        std::size_t used = 0;
        idx.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InvalidInput("ParabolicSubset: cannot parse '" + text + "'");
      }
    }
    return ParabolicSubset(rank, std::move(idx));
  }
  static ParabolicSubset from_mask(int rank, unsigned mask) {
    std::vector<int> idx;
    for (int i = 1; i <= rank; ++i)
      if (mask >> (i - 1) & 1u) idx.push_back(i);
    return ParabolicSubset(rank, std::move(idx));
  }

  int rank() const noexcept { return rank_; }
  const std::vector<int>& indices() const noexcept { return j_; }
  bool contains(int i) const { return std::binary_search(j_.begin(), j_.end(), i); }
  bool empty() const noexcept { return j_.empty(); }
  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < j_.size(); ++k) s += (k ? "," : "") + std::to_string(j_[k]);
    return s;
  }

  /// Whether beta lies in the Levi root subsystem (support inside J).
  bool in_levi(const Root& beta) const {
    for (int i = 0; i < static_cast<int>(beta.coords.size()); ++i)
      if (beta.coords[i] != 0 && !contains(i + 1)) return false;
    return true;
  }

 private:
  int rank_ = 0;
  std::vector<int> j_;
};

struct CosetDecomposition {
  WeylElement min_rep;  // w^P
  WeylElement parabolic_part;  // w_P
};

/// w = w^P w_P with l(w) = l(w^P) + l(w_P) and no right descent of w^P in J.
inline CosetDecomposition min_coset_rep(const WeylGroup& g, const WeylElement& w, const ParabolicSubset& J) {
  WeylElement rep = w;
  WeylElement part = g.identity();
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : J.indices())
      if (g.is_right_descent(rep, j)) {
        rep = g.multiply(rep, g.simple_reflection(j));
        part = g.multiply(g.simple_reflection(j), part);
        changed = true;
      }
  }
  return {rep, part};
}

inline bool in_min_coset_reps(const WeylGroup& g, const WeylElement& w, const ParabolicSubset& J) {
  return std::none_of(J.indices().begin(), J.indices().end(), [&](int j) { return g.is_right_descent(w, j); });
}

/// Canonical representative (v w_P^{-1}, w^P) of a ~-class of pairs.
struct PairClass {
  int v_id = -1, w_id = -1;
  auto operator<=>(const PairClass&) const = default;
};

/// P-Bruhat order on an enumerated group: transitive closure of the covers
/// v < w with vW_P != wW_P.  Rows are filled lazily, once each.
class ParabolicOrder {
 public:
  ParabolicOrder(std::shared_ptr<const BruhatOrder> order, ParabolicSubset J)
      : order_(std::move(order)), J_(std::move(J)), rows_(order_->group().size()), once_(order_->group().size()) {
    const EnumeratedGroup& G = order_->group();
    if (J_.rank() != G.rank()) throw InvalidInput("ParabolicOrder: subset rank mismatch");
    rep_.resize(G.size());
    part_.resize(G.size());
    for (int x = 0; x < G.size(); ++x) {
      const auto cd = min_coset_rep(G.group(), G.element(x), J_);
      rep_[x] = G.id_of(cd.min_rep);
      part_[x] = G.id_of(cd.parabolic_part);
    }
  }

  const BruhatOrder& bruhat() const noexcept { return *order_; }
  const EnumeratedGroup& group() const noexcept { return order_->group(); }
  const ParabolicSubset& subset() const noexcept { return J_; }

  int min_rep(int w) const { return rep_[w]; }
  int parabolic_part(int w) const { return part_[w]; }
  bool is_min_rep(int w) const { return rep_[w] == w; }
  bool p_covers(int v, int w) const { return order_->covers(v, w) && rep_[v] != rep_[w]; }

  bool leq(int v, int w) const { return row(w)[v] != 0; }

  /// Elements v with v <=_P w, by BFS down the P-covers.
  const std::vector<char>& row(int w) const {
    std::call_once(once_[w], [&] {
      std::vector<char> r(group().size(), 0);
      std::vector<int> stack{w};
      r[w] = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : order_->lower_covers(x))
          if (!r[y] && rep_[y] != rep_[x]) {
            r[y] = 1;
            stack.push_back(y);
          }
      }
      rows_[w] = std::move(r);
    });
    return rows_[w];
  }

  PairClass canonicalize(int v, int w) const {
    if (!leq(v, w)) throw InvalidInput("canonicalize_pair: v is not below w in the P-Bruhat order");
    const EnumeratedGroup& G = group();
    return PairClass{G.multiply(v, G.inverse(part_[w])), rep_[w]};
  }

 private:
  std::shared_ptr<const BruhatOrder> order_;
  ParabolicSubset J_;
  std::vector<int> rep_, part_;
  mutable std::vector<std::vector<char>> rows_;
  mutable std::vector<std::once_flag> once_;
};

inline bool p_bruhat_leq(const ParabolicOrder& P, const WeylElement& v, const WeylElement& w) {
  return P.leq(P.group().id_of(v), P.group().id_of(w));
}

inline PairClass canonicalize_pair(const ParabolicOrder& P, const WeylElement& v, const WeylElement& w) {
  return P.canonicalize(P.group().id_of(v), P.group().id_of(w));
}

/// GCR pairs with w in W^P.
inline std::vector<GcrPair> gcr_p(const GcrPoset& poset, const ParabolicOrder& P) {
  std::vector<GcrPair> out;
  for (const auto& p : poset.pairs())
    if (P.is_min_rep(p.w_id)) out.push_back(p);
  return out;
}

/// [v, w]_P equals [v, w] as sets, and the two orders agree on it.
inline bool verify_p_interval(const ParabolicOrder& P, const GcrPair& p) {
  const EnumeratedGroup& G = P.group();
  const int v = G.id_of(p.v), w = G.id_of(p.w);
  if (!P.leq(v, w)) return false;
  std::vector<int> p_interval;
  const auto& below = P.row(w);
  for (int x = 0; x < G.size(); ++x)
    if (below[x] && P.leq(v, x)) p_interval.push_back(x);
  const Interval iv = P.bruhat().interval(v, w);
  if (p_interval != iv.elements) return false;
  for (int a : iv.elements)
    for (int b : iv.elements)
      if (P.leq(a, b) != P.bruhat().leq(a, b)) return false;
  return verify_powerset_interval(P.bruhat(), p);
}

/// The classes of (v_A, w_B) over disjoint A, B are pairwise distinct, and
/// each v_A <=_P w_B.
inline bool verify_classes_distinct(const ParabolicOrder& P, const GcrPair& p) {
  const EnumeratedGroup& G = P.group();
  std::set<PairClass> seen;
  std::size_t count = 0;
  for (const auto& sp : sub_pairs(G.group(), p)) {
    const int a = G.id_of(sp.vJ), b = G.id_of(sp.wK);
    if (!P.leq(a, b)) return false;
    seen.insert(P.canonicalize(a, b));
    ++count;
  }
  return seen.size() == count;
}

/// Every witness root beta has w^{-1}(beta) outside the Levi roots.
inline bool witness_roots_avoid_levi(const WeylGroup& g, const GcrPair& p, const ParabolicSubset& J) {
  const WeylElement winv = g.inverse(p.w);
  return std::none_of(p.witness_roots.begin(), p.witness_roots.end(),
                      [&](const Root& beta) { return J.in_levi(g.act(winv, beta)); });
}

}  // namespace flagdeg
