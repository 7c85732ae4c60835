#pragma once

// Kostant's cascade of strongly orthogonal roots.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flagdeg/rootsys.hpp"
#include "flagdeg/weyl.hpp"

namespace flagdeg {

struct CascadeNode {
  Root gamma;
  std::vector<int> support;  // 1-based simple indices of Delta(gamma)
  SimpleType support_type;   // Dynkin type of Delta(gamma)
  int dual_coxeter = 0;      // of Delta(gamma)
  std::vector<Root> e_set;   // mu in Delta(gamma)_+ with (mu, gamma) > 0, root order
  std::vector<std::pair<Root, Root>> heisenberg_pairs;
  int parent = -1;
  std::vector<int> children;  // indices into Cascade::nodes
};

/// Forest stored in preorder, components in canonical order.
struct Cascade {
  std::vector<CascadeNode> nodes;
  std::vector<int> tops;

  std::vector<Root> roots() const {
    std::vector<Root> out;
    for (const auto& n : nodes) out.push_back(n.gamma);
    return out;
  }
  std::size_t size() const noexcept { return nodes.size(); }
};

inline std::vector<int> support_of(const Root& r) {
  std::vector<int> s;
  for (std::size_t i = 0; i < r.coords.size(); ++i)
    if (r.coords[i] != 0) s.push_back(static_cast<int>(i + 1));
  return s;
}

inline bool supported_on(const Root& r, const std::vector<int>& support) {
  for (std::size_t i = 0; i < r.coords.size(); ++i)
    if (r.coords[i] != 0 && !std::binary_search(support.begin(), support.end(), static_cast<int>(i + 1))) return false;
  return true;
}

/// Simple indices of beta and the positive roots supported on them.
inline std::pair<std::vector<int>, std::vector<Root>> support_subsystem(const RootSystem& rs, const Root& beta) {
  if (!beta.is_positive() || !rs.is_root(beta)) throw InvalidInput("support_subsystem: not a positive root");
  std::vector<int> support = support_of(beta);
  std::vector<Root> roots;
  for (const auto& r : rs.positive_roots())
    if (supported_on(r, support)) roots.push_back(r);
  return {support, roots};
}

/// Dynkin type of the subsystem spanned by the given simple roots.
inline std::vector<DynkinComponent> support_dynkin(const RootSystem& rs, const std::vector<int>& support) {
  const int k = static_cast<int>(support.size());
  IntMatrix sub(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) sub(a, b) = rs.cartan()(support[a] - 1, support[b] - 1);
  return identify_dynkin(sub);
}

/// gamma is the highest root of Delta(gamma).
inline bool is_locally_high(const RootSystem& rs, const Root& gamma) {
  const std::vector<int> support = support_of(gamma);
  for (int i : support) {
    Root up{gamma.coords};
    ++up.coords[i - 1];
    if (rs.is_root(up)) return false;
  }
  return true;
}

/// Splits a set of positive roots, closed under the subsystem it spans, into
/// the positive roots of its irreducible components (non-orthogonality
/// classes). Components are ordered by their smallest simple index.
inline std::vector<std::vector<Root>> irreducible_parts(const RootSystem& rs, const std::vector<Root>& roots) {
  const std::size_t m = roots.size();
  std::vector<int> comp(m, -1);
  int count = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < m; ++b)
        if (comp[b] < 0 && !rs.orthogonal(roots[a], roots[b])) {
          comp[b] = count;
          stack.push_back(b);
        }
    }
    ++count;
  }
  std::vector<std::vector<Root>> parts(count);
  for (std::size_t a = 0; a < m; ++a) parts[comp[a]].push_back(roots[a]);
  auto min_index = [](const std::vector<Root>& part) {
    int best = 1 << 30;
    for (const auto& r : part) {
      const auto s = support_of(r);
      best = std::min(best, s.front());
    }
    return best;
  };
  std::sort(parts.begin(), parts.end(), [&](const auto& a, const auto& b) { return min_index(a) < min_index(b); });
  return parts;
}

/// Highest roots of the components of Delta(gamma)°_+.
inline std::vector<Root> descendants(const RootSystem& rs, const Root& gamma) {
  if (!is_locally_high(rs, gamma)) throw InvalidInput("descendants: root is not locally high: " + to_string(gamma));
  const auto [support, roots] = support_subsystem(rs, gamma);
  std::vector<Root> perp;
  for (const auto& r : roots)
    if (rs.orthogonal(r, gamma)) perp.push_back(r);
  std::vector<Root> out;
  for (const auto& part : irreducible_parts(rs, perp)) {
    const Root* best = &part.front();
    for (const auto& r : part)
      if (r.height() > best->height()) best = &r;
    out.push_back(*best);
  }
  return out;
}

/// E(gamma) and its matching mu <-> gamma - mu.
inline CascadeNode make_cascade_node(const RootSystem& rs, const Root& gamma) {
  CascadeNode node;
  node.gamma = gamma;
  auto [support, roots] = support_subsystem(rs, gamma);
  node.support = support;
  const auto dyn = support_dynkin(rs, support);
  if (dyn.size() != 1) throw VerificationFailure("cascade: support subsystem is not irreducible");
  node.support_type = dyn.front().type;
  node.dual_coxeter = dual_coxeter_number(node.support_type);
  for (const auto& r : roots)
    if (rs.pairing(r, gamma) > 0) node.e_set.push_back(r);
  std::set<Root> used;
  for (const auto& mu : node.e_set) {
    if (mu == gamma || used.count(mu)) continue;
    Root nu{gamma.coords};
    for (std::size_t i = 0; i < nu.coords.size(); ++i) nu.coords[i] -= mu.coords[i];
    if (nu == mu || std::find(node.e_set.begin(), node.e_set.end(), nu) == node.e_set.end() || used.count(nu))
      throw VerificationFailure("cascade: no Heisenberg twin for " + to_string(mu) + " in E(" + to_string(gamma) + ")");
    used.insert(mu);
    used.insert(nu);
    node.heisenberg_pairs.emplace_back(mu, nu);
  }
  return node;
}

inline Cascade build_cascade(const RootSystem& rs) {
  Cascade c;
  auto grow = [&](auto& self, const Root& gamma, int parent) -> int {
    const int idx = static_cast<int>(c.nodes.size());
    c.nodes.push_back(make_cascade_node(rs, gamma));
    c.nodes[idx].parent = parent;
    for (const auto& child : descendants(rs, gamma)) {
      const int k = self(self, child, idx);
      c.nodes[idx].children.push_back(k);
    }
    return idx;
  };
  for (const auto& theta : rs.highest_roots()) c.tops.push_back(grow(grow, theta, -1));
  return c;
}

struct KostantReport {
  bool product_is_w0 = false;
  bool reflections_commute = false;
  bool partition = false;
  bool strongly_orthogonal = false;
  bool e_sizes = false;        // |E(gamma)| = 2 h^vee(gamma) - 3
  bool pairing_is_one = false; // 2 (gamma, mu) / |gamma|^2 = 1 off gamma
  bool matching = false;       // pair count (|E| - 1) / 2, twins positive and distinct
  int cascade_size = 0;
  int reflection_length_w0 = 0;

  bool ok() const {
    return product_is_w0 && reflections_commute && partition && strongly_orthogonal && e_sizes && pairing_is_one &&
           matching && cascade_size == reflection_length_w0;
  }
};

inline KostantReport verify_kostant(const WeylGroup& g, const Cascade& c) {
  const RootSystem& rs = g.root_system();
  KostantReport rep;
  rep.cascade_size = static_cast<int>(c.size());
  const WeylElement w0 = g.longest_element();
  rep.reflection_length_w0 = g.reflection_length(w0);

  std::vector<IntMatrix> refl;
  IntMatrix prod = IntMatrix::identity(g.rank());
  for (const auto& n : c.nodes) {
    refl.push_back(g.reflection(n.gamma).matrix());
    prod = prod * refl.back();
  }
  rep.product_is_w0 = prod == w0.matrix();
  rep.reflections_commute = true;
  rep.strongly_orthogonal = true;
  for (std::size_t a = 0; a < refl.size(); ++a)
    for (std::size_t b = a + 1; b < refl.size(); ++b) {
      if (!(refl[a] * refl[b] == refl[b] * refl[a])) rep.reflections_commute = false;
      if (!rs.strongly_orthogonal(c.nodes[a].gamma, c.nodes[b].gamma)) rep.strongly_orthogonal = false;
    }

  std::map<Root, int> hits;
  rep.e_sizes = rep.pairing_is_one = rep.matching = true;
  for (const auto& n : c.nodes) {
    for (const auto& mu : n.e_set) ++hits[mu];
    if (static_cast<int>(n.e_set.size()) != 2 * n.dual_coxeter - 3) rep.e_sizes = false;
    const long g2 = rs.norm2(n.gamma);
    for (const auto& mu : n.e_set)
      if (mu != n.gamma && 2 * rs.pairing(n.gamma, mu) != g2) rep.pairing_is_one = false;
    if (n.heisenberg_pairs.size() * 2 + 1 != n.e_set.size()) rep.matching = false;
    for (const auto& [mu, nu] : n.heisenberg_pairs)
      if (mu == nu || !mu.is_positive() || !nu.is_positive()) rep.matching = false;
  }
  rep.partition = static_cast<int>(hits.size()) == rs.num_positive_roots();
  for (const auto& [r, k] : hits)
    if (k != 1 || !rs.positive_id(r.coords)) rep.partition = false;
  return rep;
}

}  // namespace flagdeg
