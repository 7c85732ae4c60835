#pragma once

// Finite crystallographic root systems in the simple-root basis.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagdeg/cartan.hpp"
#include "flagdeg/errors.hpp"
#include "flagdeg/exact.hpp"

namespace flagdeg {

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : c) {
      h ^= static_cast<std::size_t>(v + 1024);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

/// A root, as integer coefficients on the simple roots a_1..a_n.
struct Root {
  Coords coords;

  int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }
  bool is_positive() const {
    bool any = false;
    for (int c : coords) {
      if (c < 0) return false;
      any = any || c > 0;
    }
    return any;
  }
  Root operator-() const {
    Root r{coords};
    for (int& c : r.coords) c = -c;
    return r;
  }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Sum a_1 + ... written compactly, e.g. "a1+a2" or "a1+2a2+a3".
inline std::string to_string(const Root& r) {
  std::string s;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    int c = r.coords[i];
    if (c == 0) continue;
    if (c < 0) {
      s += '-';
      c = -c;
    } else if (!s.empty()) {
      s += '+';
    }
    if (c != 1) s += std::to_string(c);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

inline std::ostream& operator<<(std::ostream& os, const Root& r) { return os << to_string(r); }

/// Immutable after construction.
class RootSystem {
 public:
  /// Materializes the Bourbaki-labelled root system of a Cartan type.
  explicit RootSystem(const CartanType& type) : RootSystem(bourbaki_cartan(type)) { type_ = type; }

  /// Root system of arbitrary (valid) Cartan data; used for subsystems.
  explicit RootSystem(CartanData data)
      : cartan_(std::move(data.cartan)), d_(std::move(data.symmetrizers)), form_(cartan_.size()) {
    const int n = rank();
    if (static_cast<int>(d_.size()) != n) throw InvalidInput("RootSystem: symmetrizer count mismatch");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) form_(i, j) = d_[i] * cartan_(i, j);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (form_(i, j) != form_(j, i)) throw InvalidInput("RootSystem: form is not symmetric");
    if (!type_) {
      std::vector<SimpleType> comps;
      for (const auto& dc : identify_dynkin(cartan_)) comps.push_back(dc.type);
      type_ = CartanType(comps);
    }
    enumerate();
  }

  int rank() const noexcept { return cartan_.size(); }
  const CartanType& type() const { return *type_; }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<int>& symmetrizers() const noexcept { return d_; }
  /// Gram matrix (a_i, a_j) = d_i c_ij.
  const IntMatrix& form() const noexcept { return form_; }

  /// Positive roots ordered by height, then by decreasing lexicographic
  /// coordinates (simple roots appear as a_1, ..., a_n).
  const std::vector<Root>& positive_roots() const noexcept { return positive_; }
  int num_positive_roots() const noexcept { return static_cast<int>(positive_.size()); }
  const Root& positive_root(int id) const { return positive_.at(id); }

  Root simple_root(int i) const {
    check_index(i);
    Root r{Coords(rank(), 0)};
    r.coords[i - 1] = 1;
    return r;
  }

  /// Id of a positive root, or nullopt when `c` is not a positive root.
  std::optional<int> positive_id(const Coords& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_root(const Coords& c) const {
    if (static_cast<int>(c.size()) != rank()) return false;
    if (index_.count(c)) return true;
    Coords neg(c);
    for (int& x : neg) x = -x;
    return index_.count(neg) > 0;
  }
  bool is_root(const Root& r) const { return is_root(r.coords); }

  /// Root id of |r| and whether r itself is negative. Throws if r is not a root.
  std::pair<int, bool> signed_id(const Coords& c) const {
    if (auto id = positive_id(c)) return {*id, false};
    Coords neg(c);
    for (int& x : neg) x = -x;
    if (auto id = positive_id(neg)) return {*id, true};
    throw InvalidInput("signed_id: not a root");
  }

  long pairing(const Coords& x, const Coords& y) const {
    check_dim(x.size());
    check_dim(y.size());
    long acc = 0;
    for (int i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < rank(); ++j) acc += static_cast<long>(x[i]) * form_(i, j) * y[j];
    }
    return acc;
  }
  long pairing(const Root& x, const Root& y) const { return pairing(x.coords, y.coords); }

  Rational pairing(const RationalVector& x, const RationalVector& y) const {
    check_dim(x.size());
    check_dim(y.size());
    Rational acc = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) acc += x[i] * form_(i, j) * y[j];
    return acc;
  }

  long norm2(const Root& r) const { return pairing(r, r); }

  /// s_beta(x) = x - 2 (x,beta)/(beta,beta) beta.
  RationalVector reflect(const Root& beta, const RationalVector& x) const {
    require_root(beta);
    const RationalVector b = to_rational(beta.coords);
    const Rational f = 2 * pairing(x, b) / Rational(norm2(beta));
    RationalVector out(x);
    for (int i = 0; i < rank(); ++i) out[i] -= f * b[i];
    return out;
  }

  /// Integer version for root-lattice vectors.
  Coords reflect(const Root& beta, const Coords& x) const {
    require_root(beta);
    const long num = 2 * pairing(x, beta.coords);
    const long den = norm2(beta);
    if (num % den != 0) throw InvalidInput("reflect: vector is not in the root lattice");
    const long f = num / den;
    Coords out(x);
    for (int i = 0; i < rank(); ++i) out[i] -= static_cast<int>(f * beta.coords[i]);
    return out;
  }

  std::optional<Root> add_roots(const Root& beta, const Root& gamma) const {
    check_dim(beta.coords.size());
    check_dim(gamma.coords.size());
    Root s{beta.coords};
    for (int i = 0; i < rank(); ++i) s.coords[i] += gamma.coords[i];
    if (is_root(s)) return s;
    return std::nullopt;
  }

  bool orthogonal(const Root& beta, const Root& gamma) const { return pairing(beta, gamma) == 0; }

  /// Orthogonal and neither beta+gamma nor beta-gamma is a root.
  bool strongly_orthogonal(const Root& beta, const Root& gamma) const {
    if (!orthogonal(beta, gamma)) return false;
    if (add_roots(beta, gamma)) return false;
    return !add_roots(beta, -gamma);
  }

  /// Simple indices (1-based) of each simple component, in the order of
  /// `identify_dynkin` on the Cartan matrix (by smallest index).
  const std::vector<std::vector<int>>& components() const noexcept { return components_; }

  /// Highest root of each simple component, in component order.
  std::vector<Root> highest_roots() const {
    std::vector<Root> out;
    for (const auto& comp : components_) {
      const Root* best = nullptr;
      for (const auto& r : positive_) {
        bool inside = true;
        for (int i = 0; i < rank(); ++i)
          if (r.coords[i] != 0 && std::find(comp.begin(), comp.end(), i + 1) == comp.end()) inside = false;
        if (inside && (!best || r.height() > best->height())) best = &r;
      }
      out.push_back(*best);
    }
    return out;
  }

  /// <x, a_i^vee> for a lattice vector x.
  int coroot_pairing(const Coords& x, int i) const {
    check_index(i);
    int acc = 0;
    for (int j = 0; j < rank(); ++j) acc += x[j] * cartan_(i - 1, j);
    return acc;
  }

  void check_index(int i) const {
    if (i < 1 || i > rank()) throw InvalidInput("simple index " + std::to_string(i) + " out of range");
  }

 private:
  void check_dim(std::size_t k) const {
    if (static_cast<int>(k) != rank()) throw InvalidInput("root system: dimension mismatch");
  }
  void require_root(const Root& r) const {
    if (!is_root(r)) throw InvalidInput("not a root: " + to_string(r));
  }

  void enumerate() {
    const int n = rank();
    std::set<Coords> seen;
    std::vector<Coords> queue;
    for (int i = 1; i <= n; ++i) {
      Coords e(n, 0);
      e[i - 1] = 1;
      if (seen.insert(e).second) queue.push_back(e);
    }
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (int i = 1; i <= n; ++i) {
        Coords y = queue[k];
        const int c = coroot_pairing(y, i);
        y[i - 1] -= c;
        if (seen.insert(y).second) queue.push_back(y);
      }
      if (queue.size() > 100000) throw InvalidInput("RootSystem: Cartan matrix is not of finite type");
    }
    for (const auto& c : seen) {
      Root r{c};
      if (r.is_positive()) positive_.push_back(r);
    }
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
      const int ha = a.height(), hb = b.height();
      if (ha != hb) return ha < hb;
      return a.coords > b.coords;  // so that a_1, ..., a_n come first in index order
    });
    for (std::size_t i = 0; i < positive_.size(); ++i) index_[positive_[i].coords] = static_cast<int>(i);
    for (const auto& dc : identify_dynkin(cartan_)) {
      std::vector<int> idx;
      for (int v : dc.nodes) idx.push_back(v + 1);
      std::sort(idx.begin(), idx.end());
      components_.push_back(idx);
    }
  }

  std::optional<CartanType> type_;
  IntMatrix cartan_;
  std::vector<int> d_;
  IntMatrix form_;
  std::vector<Root> positive_;
  std::unordered_map<Coords, int, CoordsHash> index_;
  std::vector<std::vector<int>> components_;
};

inline RootSystem build_root_system(const CartanType& t) { return RootSystem(t); }
inline RootSystem build_root_system(std::string_view text) { return RootSystem(CartanType::parse(text)); }

}  // namespace flagdeg
