#pragma once

// Bruhat order, covering relation, intervals, subwords and DOT export.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "flagdeg/enumerate.hpp"
#include "flagdeg/weyl.hpp"

namespace flagdeg {

/// Removed positions p_1 < ... < p_d (1-based) inside a host word.
struct SubwordPositions {
  std::vector<int> removed;

  std::size_t size() const noexcept { return removed.size(); }
  friend bool operator==(const SubwordPositions&, const SubwordPositions&) = default;
  friend auto operator<=>(const SubwordPositions&, const SubwordPositions&) = default;
};

/// v <= w by the descent recursion: if s is a left descent of w then
/// v <= w iff min(v, sv) <= sw.
inline bool bruhat_leq(const WeylGroup& g, const WeylElement& v, const WeylElement& w) {
  if (v.length() > w.length()) return false;
  // Work with inverses so that left descents become column signs.
  IntMatrix u = g.inverse(v).matrix();
  IntMatrix x = g.inverse(w).matrix();
  const int n = g.rank();
  auto negative_column = [n](const IntMatrix& m, int i) {
    for (int r = 0; r < n; ++r)
      if (m(r, i - 1) < 0) return true;
    return false;
  };
  int remaining = w.length();
  while (remaining > 0) {
    int s = 0;
    for (int i = 1; i <= n && !s; ++i)
      if (negative_column(x, i)) s = i;
    if (negative_column(u, s)) g.right_multiply_simple(u, s);
    g.right_multiply_simple(x, s);
    --remaining;
  }
  return u.is_identity();
}

/// Value of the subword of `word` with `removed` positions deleted.
inline WeylElement subword_value(const WeylGroup& g, const Word& word, const SubwordPositions& removed) {
  Word kept;
  std::size_t r = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (r < removed.size() && removed.removed[r] == static_cast<int>(k + 1)) {
      ++r;
      continue;
    }
    kept.letters.push_back(word[k]);
  }
  return g.from_word(kept);
}

/// s_{beta_{p_1}} ... s_{beta_{p_d}} w, which equals the subword value for a
/// reduced host word.
inline WeylElement removal_product(const WeylGroup& g, const Word& word, const SubwordPositions& removed) {
  const std::vector<Root> betas = g.roots_of_word(word);
  IntMatrix m = IntMatrix::identity(g.rank());
  for (int p : removed.removed) m = m * g.reflection(betas.at(p - 1)).matrix();
  return g.make(m * g.from_word(word).matrix());
}

/// Every removal set whose complementary subword multiplies to `target`, in
/// lexicographic order of the sorted position lists. With `reduced_only`
/// only subwords of length l(target) are returned.
inline std::vector<SubwordPositions> subwords_with_value(const WeylGroup& g, const Word& word,
                                                         const WeylElement& target, bool reduced_only) {
  if (!g.is_reduced(word)) throw InvalidInput("subwords_with_value: host word is not reduced");
  const int l = static_cast<int>(word.size());
  const int d = l - target.length();
  std::vector<SubwordPositions> out;
  if (d < 0) return out;
  const int n = g.rank();
  std::vector<int> removed;
  auto ascends = [n](const IntMatrix& m, int i) {
    for (int r = 0; r < n; ++r)
      if (m(r, i - 1) < 0) return false;
    return true;
  };
  std::function<void(int, const IntMatrix&)> dfs = [&](int pos, const IntMatrix& prefix) {
    if (pos == l) {
      if (prefix == target.matrix()) out.push_back(SubwordPositions{removed});
      return;
    }
    const int removed_now = static_cast<int>(removed.size());
    const int letter = word[pos];
    // Remove first: yields lexicographic order.
    if (!reduced_only || removed_now < d) {
      removed.push_back(pos + 1);
      dfs(pos + 1, prefix);
      removed.pop_back();
    }
    const int kept_so_far = pos - removed_now;
    if (reduced_only) {
      if (kept_so_far >= target.length() || !ascends(prefix, letter)) return;
      if (l - pos - 1 < d - removed_now) return;
    }
    IntMatrix next = prefix;
    g.right_multiply_simple(next, letter);
    dfs(pos + 1, next);
  };
  dfs(0, IntMatrix::identity(n));
  return out;
}

/// Poset on element ids with its Hasse diagram.
struct Interval {
  std::vector<int> elements;                 // ascending id order
  std::vector<std::pair<int, int>> edges;    // covering pairs (lower, upper)
};

/// Bruhat order on an enumerated group. Rows of the relation are filled
/// lazily, at most once each, and are safe to query from several threads.
class BruhatOrder {
 public:
  explicit BruhatOrder(std::shared_ptr<const EnumeratedGroup> group)
      : group_(std::move(group)), rows_(group_->size()), once_(group_->size()) {
    for (const auto& r : group_->root_system().positive_roots())
      reflection_ids_.push_back(group_->id_of(group_->group().reflection(r)));
  }

  const EnumeratedGroup& group() const noexcept { return *group_; }
  std::shared_ptr<const EnumeratedGroup> group_ptr() const noexcept { return group_; }

  /// Direct descent recursion, no caching.
  bool leq_uncached(int v, int w) const {
    const EnumeratedGroup& G = *group_;
    if (G.length(v) > G.length(w)) return false;
    const int n = G.rank();
    while (w != 0) {
      int s = 1;
      while (!G.is_left_descent(w, s)) ++s;
      if (s > n) break;
      if (G.is_left_descent(v, s)) v = G.left_mul(s, v);
      w = G.left_mul(s, w);
    }
    return v == 0;
  }

  bool leq(int v, int w) const { return row(w)[v] != 0; }
  bool leq(const WeylElement& v, const WeylElement& w) const { return leq(group_->id_of(v), group_->id_of(w)); }

  /// All v <= w as a 0/1 vector over ids.
  const std::vector<char>& row(int w) const {
    std::call_once(once_[w], [&] {
      std::vector<char> r(group_->size(), 0);
      for (int v = 0; v < group_->size(); ++v) r[v] = leq_uncached(v, w) ? 1 : 0;
      rows_[w] = std::move(r);
    });
    return rows_[w];
  }

  bool covers(int v, int w) const { return group_->length(v) + 1 == group_->length(w) && leq(v, w); }

  /// Ids of t*w for every reflection t, i.e. positive root order.
  const std::vector<int>& reflection_ids() const noexcept { return reflection_ids_; }

  /// All covering pairs (v, w), sorted.
  std::vector<std::pair<int, int>> covering_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int w = 0; w < group_->size(); ++w)
      for (int t : reflection_ids_) {
        const int v = group_->multiply(t, w);
        if (group_->length(v) + 1 == group_->length(w)) out.emplace_back(v, w);
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Lower covers of w: elements t*w one step shorter.
  std::vector<int> lower_covers(int w) const {
    std::vector<int> out;
    for (int t : reflection_ids_) {
      const int v = group_->multiply(t, w);
      if (group_->length(v) + 1 == group_->length(w)) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Interval interval(int v, int w) const {
    if (!leq(v, w)) throw InvalidInput("interval: v is not below w");
    Interval iv;
    const auto& below_w = row(w);
    for (int u = 0; u < group_->size(); ++u)
      if (below_w[u] && leq(v, u)) iv.elements.push_back(u);
    for (int a : iv.elements)
      for (int b : iv.elements)
        if (group_->length(a) + 1 == group_->length(b) && leq(a, b)) iv.edges.emplace_back(a, b);
    return iv;
  }

 private:
  std::shared_ptr<const EnumeratedGroup> group_;
  mutable std::vector<std::vector<char>> rows_;
  mutable std::vector<std::once_flag> once_;
  std::vector<int> reflection_ids_;
};

/// Vertex label: one-line notation in type A, reduced word otherwise.
inline std::string element_label(const WeylGroup& g, const WeylElement& w) {
  if (g.is_type_a()) return g.one_line(w);
  const Word rw = g.reduced_word(w);
  return rw.empty() ? "e" : to_string(rw);
}

/// Graphviz text of the Bruhat graph; edges in `highlight` carry
/// `highlight=true` and a colour. Output is sorted and byte-reproducible.
inline std::string export_bruhat_graph(const BruhatOrder& order, const std::set<std::pair<int, int>>& highlight) {
  const EnumeratedGroup& G = order.group();
  std::ostringstream os;
  os << "graph bruhat {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int id = 0; id < G.size(); ++id)
    os << "  v" << id << " [label=\"" << element_label(G.group(), G.element(id)) << "\", length=" << G.length(id)
       << "];\n";
  for (const auto& [v, w] : order.covering_pairs()) {
    os << "  v" << v << " -- v" << w;
    if (highlight.count({v, w})) os << " [highlight=true, color=blue, penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace flagdeg
