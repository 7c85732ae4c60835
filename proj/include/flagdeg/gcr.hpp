#pragma once

// Pairs (v, w) whose Richardson stratum carries a vanishing Poisson
// structure: decision procedures, enumeration, maximal pairs and their
// power-set intervals.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <iterator>
#include <memory>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "flagdeg/bruhat.hpp"
#include "flagdeg/enumerate.hpp"
#include "flagdeg/parallel.hpp"
#include "flagdeg/weyl.hpp"

namespace flagdeg {

struct GcrPair {
  WeylElement v, w;
  int d = 0;
  Word host;                        // reduced word of w the positions refer to
  std::vector<int> positions;       // p_1 < ... < p_d, 1-based
  std::vector<Root> witness_roots;  // gamma_j = beta_{p_j}
  int v_id = -1, w_id = -1;         // ids in an EnumeratedGroup, if any
};

/// v w^{-1} as a matrix.
inline IntMatrix quotient_matrix(const WeylGroup& g, const WeylElement& v, const WeylElement& w) {
  return v.matrix() * g.inverse(w).matrix();
}

/// dim Ker(v w^{-1} + 1) == l(w) - l(v), assuming v <= w.
inline bool gcr_cond3_unchecked(const WeylGroup& g, const WeylElement& v, const WeylElement& w) {
  const int d = w.length() - v.length();
  if (d < 0) return false;
  return kernel_dim(quotient_matrix(g, v, w) + IntMatrix::identity(g.rank())) == d;
}

inline bool is_gcr_cond3(const WeylGroup& g, const WeylElement& v, const WeylElement& w) {
  if (!bruhat_leq(g, v, w)) throw InvalidInput("is_gcr_cond3: v is not below w");
  return gcr_cond3_unchecked(g, v, w);
}

/// (v w^{-1})^2 = 1 and l_Delta(v w^{-1}) == l(w) - l(v).
inline bool is_gcr_cond4(const WeylGroup& g, const WeylElement& v, const WeylElement& w) {
  const int d = w.length() - v.length();
  if (d < 0) return false;
  const WeylElement x = g.make(quotient_matrix(g, v, w));
  return g.is_involution(x) && g.reflection_length(x) == d;
}

/// First reduced subword of `host` (removal positions in lexicographic
/// order) with value v whose removed roots are pairwise orthogonal.
inline std::optional<GcrPair> is_gcr_cond6(const WeylGroup& g, const WeylElement& v, const WeylElement& w,
                                           const Word& host) {
  if (g.from_word(host) != w || !g.is_reduced(host)) throw InvalidInput("is_gcr_cond6: host is not a reduced word of w");
  const int l = static_cast<int>(host.size());
  const int d = w.length() - v.length();
  if (d < 0) return std::nullopt;
  const std::vector<Root> betas = g.roots_of_word(host);
  const RootSystem& rs = g.root_system();
  const int n = g.rank();

  std::vector<int> removed;
  std::optional<GcrPair> found;
  std::function<void(int, const IntMatrix&)> dfs = [&](int pos, const IntMatrix& prefix) {
    if (found) return;
    const int removed_now = static_cast<int>(removed.size());
    if (pos == l) {
      if (removed_now == d && prefix == v.matrix()) {
        GcrPair p{v, w, d, host, removed, {}};
        for (int q : removed) p.witness_roots.push_back(betas[q - 1]);
        found = std::move(p);
      }
      return;
    }
    const int letter = host[pos];
    if (removed_now < d) {
      bool orth = true;
      for (int q : removed) orth = orth && rs.orthogonal(betas[q - 1], betas[pos]);
      if (orth) {
        removed.push_back(pos + 1);
        dfs(pos + 1, prefix);
        removed.pop_back();
        if (found) return;
      }
    }
    if (l - pos - 1 < d - removed_now) return;
    // Keep the letter only if the kept prefix stays reduced.
    for (int r = 0; r < n; ++r)
      if (prefix(r, letter - 1) < 0) return;
    IntMatrix next = prefix;
    g.right_multiply_simple(next, letter);
    dfs(pos + 1, next);
  };
  dfs(0, IntMatrix::identity(n));
  return found;
}

inline std::optional<GcrPair> is_gcr_cond6(const WeylGroup& g, const WeylElement& v, const WeylElement& w) {
  return is_gcr_cond6(g, v, w, g.reduced_word(w));
}

/// GCR pairs of an enumerated group with the order of interval inclusion:
/// p <= q iff q.v <= p.v <= p.w <= q.w.
class GcrPoset {
 public:
  GcrPoset(std::shared_ptr<const BruhatOrder> order, std::vector<GcrPair> pairs)
      : order_(std::move(order)), pairs_(std::move(pairs)) {
    for (const auto& p : pairs_) keys_.emplace_back(p.v_id, p.w_id);
    std::sort(keys_.begin(), keys_.end());
  }

  const std::vector<GcrPair>& pairs() const noexcept { return pairs_; }
  const BruhatOrder& order() const noexcept { return *order_; }
  std::shared_ptr<const BruhatOrder> order_ptr() const noexcept { return order_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  bool leq(const GcrPair& p, const GcrPair& q) const {
    return order_->leq(q.v_id, p.v_id) && order_->leq(p.w_id, q.w_id);
  }

  bool contains(int v_id, int w_id) const { return std::binary_search(keys_.begin(), keys_.end(), std::pair{v_id, w_id}); }

  /// Histogram of d.
  std::vector<std::size_t> count_by_d() const {
    std::vector<std::size_t> out;
    for (const auto& p : pairs_) {
      if (static_cast<int>(out.size()) <= p.d) out.resize(p.d + 1, 0);
      ++out[p.d];
    }
    return out;
  }

 private:
  std::shared_ptr<const BruhatOrder> order_;
  std::vector<GcrPair> pairs_;
  std::vector<std::pair<int, int>> keys_;
};

/// All GCR pairs, each carrying a witness, sorted by (d, v id, w id).
/// Candidate v are restricted to l(v) >= l(w) - l_Delta(w0).
inline GcrPoset enumerate_gcr(std::shared_ptr<const BruhatOrder> order, unsigned workers = 0) {
  const EnumeratedGroup& G = order->group();
  const WeylGroup& g = G.group();
  const int bound = g.reflection_length(G.element(G.longest_id()));

  std::vector<int> ws(G.size());
  for (int k = 0; k < G.size(); ++k) ws[k] = G.size() - 1 - k;  // length descending
  std::vector<std::vector<GcrPair>> found(ws.size());
  parallel_for(ws.size(), workers, [&](std::size_t k) {
    const int w = ws[k];
    const WeylElement& we = G.element(w);
    const auto& below = order->row(w);
    for (int v = 0; v < G.size(); ++v) {
      if (!below[v] || G.length(v) < G.length(w) - bound) continue;
      const WeylElement& ve = G.element(v);
      if (!gcr_cond3_unchecked(g, ve, we)) continue;
      auto p = is_gcr_cond6(g, ve, we);
      if (!p) throw VerificationFailure("enumerate_gcr: kernel test passed but no orthogonal subword exists");
      p->v_id = v;
      p->w_id = w;
      found[k].push_back(std::move(*p));
    }
  });
  std::vector<GcrPair> all;
  for (auto& chunk : found)
    for (auto& p : chunk) all.push_back(std::move(p));
  std::sort(all.begin(), all.end(), [](const GcrPair& a, const GcrPair& b) {
    return std::tie(a.d, a.v_id, a.w_id) < std::tie(b.d, b.v_id, b.w_id);
  });
  return GcrPoset(std::move(order), std::move(all));
}

/// Pairs not strictly contained in another pair's interval.
inline std::vector<GcrPair> maximal_pairs(const GcrPoset& poset) {
  const auto& pairs = poset.pairs();
  std::vector<GcrPair> out;
  for (const auto& p : pairs) {
    bool maximal = true;
    // A strictly larger interval has strictly larger d.
    for (auto it = pairs.rbegin(); it != pairs.rend() && it->d > p.d && maximal; ++it)
      if (poset.leq(p, *it)) maximal = false;
    if (maximal) out.push_back(p);
  }
  return out;
}

/// (prod_{j in mask} s_{gamma_j}) x; bit j-1 of mask selects gamma_j.
inline WeylElement apply_witness(const WeylGroup& g, const GcrPair& p, std::uint32_t mask, const WeylElement& x) {
  IntMatrix m = IntMatrix::identity(g.rank());
  for (int j = 0; j < p.d; ++j)
    if (mask >> j & 1u) m = m * g.reflection(p.witness_roots[j]).matrix();
  return g.make(m * x.matrix());
}

inline WeylElement w_of_subset(const WeylGroup& g, const GcrPair& p, std::uint32_t k) { return apply_witness(g, p, k, p.w); }
inline WeylElement v_of_subset(const WeylGroup& g, const GcrPair& p, std::uint32_t j) { return apply_witness(g, p, j, p.v); }

struct SubPair {
  std::uint32_t J = 0, K = 0;  // disjoint subsets of [1,d] as bit masks
  WeylElement vJ, wK;
};

/// All (v_J, w_K) with J, K disjoint, ordered by (J, K).
inline std::vector<SubPair> sub_pairs(const WeylGroup& g, const GcrPair& p) {
  if (p.d > 20) throw InvalidInput("sub_pairs: d too large");
  const std::uint32_t full = (1u << p.d) - 1;
  std::vector<WeylElement> w_k(full + 1), v_j(full + 1);
  for (std::uint32_t m = 0; m <= full; ++m) {
    w_k[m] = w_of_subset(g, p, m);
    v_j[m] = v_of_subset(g, p, m);
  }
  std::vector<SubPair> out;
  for (std::uint32_t J = 0; J <= full; ++J)
    for (std::uint32_t K = 0; K <= full; ++K)
      if ((J & K) == 0) out.push_back(SubPair{J, K, v_j[J], w_k[K]});
  return out;
}

/// [v, w] consists of exactly the 2^d distinct w_K, ordered by reverse
/// inclusion of K, and its Hasse diagram is that of the boolean lattice.
inline bool verify_powerset_interval(const BruhatOrder& order, const GcrPair& p) {
  const EnumeratedGroup& G = order.group();
  const WeylGroup& g = G.group();
  const std::uint32_t count = 1u << p.d;
  std::vector<int> ids(count);
  for (std::uint32_t k = 0; k < count; ++k) ids[k] = G.id_of(w_of_subset(g, p, k));
  if (std::set<int>(ids.begin(), ids.end()).size() != count) return false;

  const Interval iv = order.interval(G.id_of(p.v), G.id_of(p.w));
  std::vector<int> sorted_ids(ids);
  std::sort(sorted_ids.begin(), sorted_ids.end());
  if (iv.elements != sorted_ids) return false;

  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b) {
      const bool superset = (a & b) == b;  // K_a contains K_b
      if (order.leq(ids[a], ids[b]) != superset) return false;
    }
  // Boolean lattice Hasse diagram: d 2^{d-1} edges, each adding one index.
  if (iv.edges.size() != static_cast<std::size_t>(p.d) * (count / 2)) return false;
  for (const auto& [lo, hi] : iv.edges) {
    const auto ka = static_cast<std::uint32_t>(std::find(ids.begin(), ids.end(), lo) - ids.begin());
    const auto kb = static_cast<std::uint32_t>(std::find(ids.begin(), ids.end(), hi) - ids.begin());
    if ((ka & kb) != kb || std::popcount(ka ^ kb) != 1) return false;
  }
  return true;
}

/// GCR pairs lying below both p and q, i.e. strata shared by their closures.
inline std::vector<std::pair<int, int>> shared_strata(const WeylGroup& g, const EnumeratedGroup& G, const GcrPair& p,
                                                      const GcrPair& q) {
  auto ids = [&](const GcrPair& x) {
    std::set<std::pair<int, int>> s;
    for (const auto& sp : sub_pairs(g, x)) s.emplace(G.id_of(sp.vJ), G.id_of(sp.wK));
    return s;
  };
  const auto a = ids(p), b = ids(q);
  std::vector<std::pair<int, int>> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace flagdeg
