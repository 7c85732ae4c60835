#pragma once

// Cartan types, Bourbaki-labelled Cartan data and Dynkin-diagram
// identification of arbitrary (sub)system Cartan matrices.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagdeg/errors.hpp"
#include "flagdeg/exact.hpp"

namespace flagdeg {

struct SimpleType {
  char letter = 'A';
  int rank = 1;

  std::string str() const { return std::string(1, letter) + std::to_string(rank); }
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

inline void validate(const SimpleType& t) {
  const int r = t.rank;
  bool ok = false;
  switch (t.letter) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 2; break;
    case 'D': ok = r >= 4; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: throw InvalidInput(std::string("unknown Cartan letter '") + t.letter + "'");
  }
  if (!ok) throw InvalidInput("invalid rank for Cartan type " + t.str());
}

/// Dual Coxeter number of a simple type.
inline int dual_coxeter_number(const SimpleType& t) {
  const int n = t.rank;
  switch (t.letter) {
    case 'A': return n + 1;
    case 'B': return 2 * n - 1;
    case 'C': return n + 1;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    case 'F': return 9;
    case 'G': return 4;
  }
  throw InvalidInput("dual_coxeter_number: bad type");
}

inline int coxeter_number(const SimpleType& t) {
  const int n = t.rank;
  switch (t.letter) {
    case 'A': return n + 1;
    case 'B':
    case 'C': return 2 * n;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    case 'F': return 12;
    case 'G': return 6;
  }
  throw InvalidInput("coxeter_number: bad type");
}

/// Classical order of the Weyl group.
inline std::uint64_t weyl_group_order(const SimpleType& t) {
  const int n = t.rank;
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (t.letter) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * fact(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840ull : n == 7 ? 2903040ull : 696729600ull;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw InvalidInput("weyl_group_order: bad type");
}

/// A semisimple Cartan type: a canonically sorted product of simple types.
class CartanType {
 public:
  CartanType() = default;
  explicit CartanType(std::vector<SimpleType> components) : components_(std::move(components)) {
    if (components_.empty()) throw InvalidInput("empty Cartan type");
    for (const auto& c : components_) validate(c);
    std::sort(components_.begin(), components_.end());
  }

  /// Parses `<letter><rank>` factors joined by `x`, case-insensitively ("A3", "b2xG2").
  static CartanType parse(std::string_view text) {
    std::vector<SimpleType> comps;
    std::size_t pos = 0;
    auto fail = [&] { throw InvalidInput("cannot parse Cartan type '" + std::string(text) + "'"); };
    while (pos < text.size()) {
      const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
      if (letter < 'A' || letter > 'G') fail();
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos || pos - start > 3) fail();
      comps.push_back({letter, std::stoi(std::string(text.substr(start, pos - start)))});
      if (pos < text.size()) {
        if (text[pos] != 'x' && text[pos] != 'X') fail();
        ++pos;
        if (pos == text.size()) fail();
      }
    }
    return CartanType(std::move(comps));
  }

  const std::vector<SimpleType>& components() const noexcept { return components_; }
  bool is_simple() const noexcept { return components_.size() == 1; }

  int rank() const {
    int r = 0;
    for (const auto& c : components_) r += c.rank;
    return r;
  }

  std::uint64_t weyl_group_order() const {
    std::uint64_t o = 1;
    for (const auto& c : components_) o *= flagdeg::weyl_group_order(c);
    return o;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i) s += 'x';
      s += components_[i].str();
    }
    return s;
  }

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  std::vector<SimpleType> components_;
};

/// Cartan matrix entries c_ij = 2(a_i,a_j)/(a_i,a_i) together with the
/// symmetrizers d_i = (a_i,a_i)/2, so that (a_i,a_j) = d_i c_ij.
struct CartanData {
  IntMatrix cartan;
  std::vector<int> symmetrizers;
};

/// Bourbaki-labelled Cartan data of one simple type.
inline CartanData bourbaki_cartan(const SimpleType& t) {
  validate(t);
  const int n = t.rank;
  IntMatrix form(n);  // (a_i, a_j)
  std::vector<int> d(n, 1);
  auto bond = [&](int i, int j, int value) {  // 1-based
    form(i - 1, j - 1) = value;
    form(j - 1, i - 1) = value;
  };
  switch (t.letter) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n - 1; ++i) d[i] = 2;
      for (int i = 1; i < n; ++i) bond(i, i + 1, -2);
      break;
    case 'C':
      d[n - 1] = 2;
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, -1);
      bond(n - 1, n, -2);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, -1);
      bond(n - 2, n, -1);
      break;
    case 'E':
      bond(1, 3, -1);
      bond(2, 4, -1);
      for (int i = 3; i < n; ++i) bond(i, i + 1, -1);
      break;
    case 'F':
      d = {2, 2, 1, 1};
      bond(1, 2, -2);
      bond(2, 3, -2);
      bond(3, 4, -1);
      break;
    case 'G':
      d = {1, 3};
      bond(1, 2, -3);
      break;
  }
  for (int i = 0; i < n; ++i) form(i, i) = 2 * d[i];
  CartanData out{IntMatrix(n), d};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.cartan(i, j) = form(i, j) / d[i];
  return out;
}

/// Cartan data of a semisimple type: block diagonal in component order.
inline CartanData bourbaki_cartan(const CartanType& t) {
  const int n = t.rank();
  CartanData out{IntMatrix(n), std::vector<int>(n, 1)};
  int off = 0;
  for (const auto& comp : t.components()) {
    const CartanData block = bourbaki_cartan(comp);
    for (int i = 0; i < comp.rank; ++i) {
      out.symmetrizers[off + i] = block.symmetrizers[i];
      for (int j = 0; j < comp.rank; ++j) out.cartan(off + i, off + j) = block.cartan(i, j);
    }
    off += comp.rank;
  }
  return out;
}

/// One connected component of a Dynkin diagram, with `nodes[k]` the index
/// (into the analysed matrix) of Bourbaki node k+1.
struct DynkinComponent {
  SimpleType type;
  std::vector<int> nodes;
};

/// Identifies the connected components of a Cartan matrix and their types by
/// diagram shape, returning each component's nodes in Bourbaki order.
/// Components are listed by smallest member index.
inline std::vector<DynkinComponent> identify_dynkin(const IntMatrix& c) {
  const int n = c.size();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    if (c(i, i) != 2) throw InvalidInput("identify_dynkin: diagonal entry is not 2");
    for (int j = 0; j < n; ++j)
      if (i != j && c(i, j) != 0) {
        if (c(j, i) == 0) throw InvalidInput("identify_dynkin: not a Cartan matrix");
        adj[i].push_back(j);
      }
  }
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] >= 0) continue;
    std::vector<int> members{s};
    comp_of[s] = static_cast<int>(comps.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int nb : adj[members[k]])
        if (comp_of[nb] < 0) {
          comp_of[nb] = comp_of[s];
          members.push_back(nb);
        }
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  }

  auto deg = [&](int v) { return static_cast<int>(adj[v].size()); };
  // Follows a chain from `from` away from `prev`, stopping before any branch node.
  auto walk = [&](int from, int prev) {
    std::vector<int> path{from};
    int cur = from;
    while (true) {
      int next = -1, count = 0;
      for (int nb : adj[cur])
        if (nb != prev) {
          next = nb;
          ++count;
        }
      if (count != 1) break;
      prev = cur;
      cur = next;
      if (deg(cur) > 2) break;
      path.push_back(cur);
    }
    return path;
  };

  std::vector<DynkinComponent> out;
  for (const auto& members : comps) {
    const int r = static_cast<int>(members.size());
    DynkinComponent dc;
    if (r == 1) {
      dc.type = {'A', 1};
      dc.nodes = members;
      out.push_back(dc);
      continue;
    }
    if (r - 1 != [&] {
          int e = 0;
          for (int v : members) e += deg(v);
          return e / 2;
        }())
      throw InvalidInput("identify_dynkin: diagram is not a tree");

    int multi_a = -1, multi_b = -1, mult = 1;
    int branch = -1;
    for (int v : members) {
      if (deg(v) > 3) throw InvalidInput("identify_dynkin: node of degree > 3");
      if (deg(v) == 3) {
        if (branch >= 0) throw InvalidInput("identify_dynkin: two branch nodes");
        branch = v;
      }
      for (int u : adj[v]) {
        const int m = c(v, u) * c(u, v);
        if (m > 1 && v < u) {
          if (multi_a >= 0) throw InvalidInput("identify_dynkin: two multiple bonds");
          multi_a = v;
          multi_b = u;
          mult = m;
        }
      }
    }
    if (mult > 1 && branch >= 0) throw InvalidInput("identify_dynkin: not of finite type");

    if (mult == 3) {
      if (r != 2) throw InvalidInput("identify_dynkin: not of finite type");
      // Bourbaki G2: node 1 short, i.e. |c(1,2)| = 3.
      const int shortn = std::abs(c(multi_a, multi_b)) == 3 ? multi_a : multi_b;
      const int longn = shortn == multi_a ? multi_b : multi_a;
      dc.type = {'G', 2};
      dc.nodes = {shortn, longn};
    } else if (mult == 2) {
      // The long end x of a double bond x=>y has |c(x,y)| = 1.
      const int longn = std::abs(c(multi_a, multi_b)) == 1 ? multi_a : multi_b;
      const int shortn = longn == multi_a ? multi_b : multi_a;
      if (deg(longn) == 2 && deg(shortn) == 2) {
        if (r != 4) throw InvalidInput("identify_dynkin: not of finite type");
        int a = -1, b = -1;
        for (int u : adj[longn])
          if (u != shortn) a = u;
        for (int u : adj[shortn])
          if (u != longn) b = u;
        dc.type = {'F', 4};
        dc.nodes = {a, longn, shortn, b};
      } else {
        // Chain with the double bond at an end; Bourbaki B_n has a_n short,
        // C_n has a_n long.  Rank 2 is reported as B2.
        int end;
        char letter;
        if (deg(shortn) == 1) {
          end = shortn;
          letter = 'B';
        } else {
          end = longn;
          letter = 'C';
        }
        const int other = end == shortn ? longn : shortn;
        std::vector<int> path = walk(other, end);  // away from `end`
        std::reverse(path.begin(), path.end());
        path.push_back(end);
        dc.type = {letter, r};
        dc.nodes = path;
      }
    } else if (branch >= 0) {
      std::vector<std::vector<int>> arms;
      for (int u : adj[branch]) arms.push_back(walk(u, branch));
      std::stable_sort(arms.begin(), arms.end(),
                       [](const auto& x, const auto& y) { return x.size() < y.size(); });
      const std::size_t a = arms[0].size(), b = arms[1].size(), l = arms[2].size();
      if (a == 1 && b == 1) {
        // D_n: long arm 1..n-3, branch n-2, leaves n-1, n.
        std::vector<int> nodes(arms[2].rbegin(), arms[2].rend());
        nodes.push_back(branch);
        nodes.push_back(arms[0][0]);
        nodes.push_back(arms[1][0]);
        dc.type = {'D', r};
        dc.nodes = nodes;
      } else if (a == 1 && b == 2 && l >= 2 && l <= 4) {
        // E_n: 1 - 3 - 4 - 5 - ... with 2 attached to 4.
        std::vector<int> nodes{arms[1][1], arms[0][0], arms[1][0], branch};
        for (int u : arms[2]) nodes.push_back(u);
        dc.type = {'E', r};
        dc.nodes = nodes;
      } else {
        throw InvalidInput("identify_dynkin: not of finite type");
      }
    } else {
      int end = -1;
      for (int v : members)
        if (deg(v) == 1) {
          end = v;
          break;
        }
      dc.type = {'A', r};
      dc.nodes = walk(end, -1);
    }
    if (static_cast<int>(dc.nodes.size()) != r) throw InvalidInput("identify_dynkin: internal walk error");
    out.push_back(dc);
  }
  return out;
}

}  // namespace flagdeg
