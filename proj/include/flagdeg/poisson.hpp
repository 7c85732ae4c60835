#pragma once

// Standard Poisson bivector of SL_{n+1}/B_+ on translated big cells
// v U_- B_+ / B_+, its degeneracy ideal, and non-reducedness witnesses.
//
// Sign convention: entry(a, b) is the coefficient of d_a ^ d_b and equals
// {x_a, x_b}.  Reports list pairs with a > b in row-major order, so the
// term for {x31, x21} is printed as "(...) ∂31∧∂21".

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flagdeg/parallel.hpp"
#include "flagdeg/polyalg.hpp"
#include "flagdeg/weyl.hpp"

namespace flagdeg {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Coordinates x_ij (i > j) on v U_- B_+ / B_+ in SL_{n+1}.
struct Chart {
  int n = 0;
  std::vector<int> v;                      // one-line notation
  Word word;                               // reduced word used for the representative
  IntMatrix rep;                           // signed permutation matrix for v
  RingPtr ring;
  std::vector<std::pair<int, int>> index;  // variable k -> (i, j), 1-based

  int size() const { return static_cast<int>(index.size()); }
  std::string cell() const {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (v.size() > 9 && k ? "," : "") + std::to_string(v[k]);
    return s;
  }
  /// Variable number of x_ij.
  int var(int i, int j) const {
    for (int k = 0; k < size(); ++k)
      if (index[k] == std::pair{i, j}) return k;
    throw InvalidInput("Chart::var: no coordinate x" + std::to_string(i) + std::to_string(j));
  }
};

inline std::string coordinate_name(int n, int i, int j) {
  return n + 1 <= 9 ? "x" + std::to_string(i) + std::to_string(j)
                    : "x" + std::to_string(i) + "_" + std::to_string(j);
}

inline Chart make_chart(int n, std::string_view cell) {
  if (n < 1) throw InvalidInput("make_chart: n must be positive");
  const WeylGroup g("A" + std::to_string(n));
  const WeylElement w = g.from_one_line(cell);
  Chart c;
  c.n = n;
  c.v = g.permutation(w);
  c.word = g.reduced_word(w);
  c.rep = IntMatrix::identity(n + 1);
  for (int i : c.word.letters) {
    // right multiply by the embedded [[0,1],[-1,0]] at rows/cols i, i+1
    for (int r = 0; r <= n; ++r) {
      const int a = c.rep(r, i - 1), b = c.rep(r, i);
      c.rep(r, i - 1) = -b;
      c.rep(r, i) = a;
    }
  }
  std::vector<std::string> names;
  for (int i = 2; i <= n + 1; ++i)
    for (int j = 1; j < i; ++j) {
      c.index.emplace_back(i, j);
      names.push_back(coordinate_name(n, i, j));
    }
  c.ring = make_ring(std::move(names));
  return c;
}

inline Chart make_chart(int n) {
  std::string id;
  for (int k = 1; k <= n + 1; ++k) id += (n + 1 > 9 && k > 1 ? "," : "") + std::to_string(k);
  return make_chart(n, id);
}

namespace detail {

inline PolyMatrix poly_matrix(const RingPtr& R, int dim) {
  return PolyMatrix(dim, std::vector<Polynomial>(dim, Polynomial(R)));
}

inline PolyMatrix lift(const RingPtr& R, const IntMatrix& m) {
  PolyMatrix out = poly_matrix(R, m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out[r][c] = Polynomial::constant(R, m(r, c));
  return out;
}

inline PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
  const int d = static_cast<int>(a.size());
  PolyMatrix out = poly_matrix(a[0][0].ring(), d);
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) {
      if (a[r][k].is_zero()) continue;
      for (int c = 0; c < d; ++c)
        if (!b[k][c].is_zero()) out[r][c] = out[r][c] + a[r][k] * b[k][c];
    }
  return out;
}

/// Generic unipotent u and its inverse sum_k (I - u)^k.
inline std::pair<PolyMatrix, PolyMatrix> unipotent(const Chart& c) {
  const int d = c.n + 1;
  PolyMatrix u = lift(c.ring, IntMatrix::identity(d));
  PolyMatrix nil = poly_matrix(c.ring, d);
  for (int k = 0; k < c.size(); ++k) {
    const auto [i, j] = c.index[k];
    u[i - 1][j - 1] = Polynomial::variable(c.ring, k);
    nil[i - 1][j - 1] = -Polynomial::variable(c.ring, k);
  }
  PolyMatrix inv = lift(c.ring, IntMatrix::identity(d));
  PolyMatrix power = lift(c.ring, IntMatrix::identity(d));
  for (int k = 1; k < d; ++k) {
    power = mul(power, nil);
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s) inv[r][s] = inv[r][s] + power[r][s];
  }
  return {u, inv};
}

inline IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) t(c, r) = m(r, c);
  return t;
}

inline IntMatrix elementary(int dim, int i, int j) {
  IntMatrix e(dim);
  e(i - 1, j - 1) = 1;
  return e;
}

/// Precomputed u, (v u)^{-1} and v u for repeated vector fields.
struct ChartFrame {
  PolyMatrix u, g, g_inv;
  explicit ChartFrame(const Chart& c) {
    auto [uu, uinv] = unipotent(c);
    u = std::move(uu);
    g = mul(lift(c.ring, c.rep), u);
    // rep is a signed permutation, so its inverse is its transpose
    g_inv = mul(uinv, lift(c.ring, transpose(c.rep)));
  }
};

inline std::vector<Polynomial> vector_field(const Chart& c, const ChartFrame& f, const IntMatrix& X) {
  const int d = c.n + 1;
  const PolyMatrix m = mul(mul(f.g_inv, lift(c.ring, X)), f.g);
  PolyMatrix lower = poly_matrix(c.ring, d);
  for (int r = 0; r < d; ++r)
    for (int s = 0; s < r; ++s) lower[r][s] = m[r][s];
  const PolyMatrix du = mul(f.u, lower);
  std::vector<Polynomial> out;
  out.reserve(c.size());
  for (const auto& [i, j] : c.index) out.push_back(du[i - 1][j - 1]);
  return out;
}

}  // namespace detail

/// Infinitesimal action of X at v u B_+, one component per coordinate.
inline std::vector<Polynomial> vector_field(const Chart& c, const IntMatrix& X) {
  if (X.size() != c.n + 1) throw InvalidInput("vector_field: matrix size does not match the chart");
  long long trace = 0;
  for (int i = 0; i < X.size(); ++i) trace += X(i, i);
  if (trace != 0) throw InvalidInput("vector_field: X is not traceless");
  return detail::vector_field(c, detail::ChartFrame(c), X);
}

/// Antisymmetric matrix of brackets {x_a, x_b}.
struct PoissonMatrix {
  Chart chart;
  PolyMatrix entries;

  const Polynomial& operator()(int a, int b) const { return entries.at(a).at(b); }
  int size() const { return static_cast<int>(entries.size()); }

  bool is_antisymmetric() const {
    for (int a = 0; a < size(); ++a) {
      if (!entries[a][a].is_zero()) return false;
      for (int b = 0; b < a; ++b)
        if (!(entries[a][b] == -entries[b][a])) return false;
    }
    return true;
  }

  /// "(-x21*x31) ∂31∧∂21 + ..." over a > b with nonzero entries.
  std::string bivector_string() const {
    std::string s;
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < a; ++b) {
        if (entries[a][b].is_zero()) continue;
        auto label = [&](int k) {
          const auto [i, j] = chart.index[k];
          return coordinate_name(chart.n, i, j).substr(1);
        };
        if (!s.empty()) s += " + ";
        s += "(" + entries[a][b].str() + ") ∂" + label(a) + "∧∂" + label(b);
      }
    return s.empty() ? "0" : s;
  }
};

/// pi = sum over positive roots of chi(e_beta) ^ chi(f_beta).  The optional
/// scale replaces (e, f) by (lambda e, f / lambda).
inline PoissonMatrix poisson_matrix(const Chart& c, const Rational& lambda = 1) {
  if (lambda == 0) throw InvalidInput("poisson_matrix: zero scale");
  const int d = c.n + 1;
  const int N = c.size();
  const detail::ChartFrame frame(c);
  PoissonMatrix pm{c, detail::poly_matrix(c.ring, N)};
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      std::vector<Polynomial> e = detail::vector_field(c, frame, detail::elementary(d, i, j));
      std::vector<Polynomial> f = detail::vector_field(c, frame, detail::elementary(d, j, i));
      if (lambda != 1) {
        for (auto& p : e) p = lambda * p;
        for (auto& p : f) p = Rational(1 / lambda) * p;
      }
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
          if (a != b) pm.entries[a][b] = pm.entries[a][b] + e[a] * f[b] - e[b] * f[a];
    }
  return pm;
}

/// Nonzero entries below the diagonal, one per sign class.
inline Ideal degeneracy_ideal(const PoissonMatrix& pm) {
  Ideal I{pm.chart.ring, {}};
  for (int a = 0; a < pm.size(); ++a)
    for (int b = 0; b < a; ++b) {
      const Polynomial& p = pm(a, b);
      if (p.is_zero()) continue;
      const Polynomial q = p.leading_term().c < 0 ? -p : p;
      if (std::find(I.generators.begin(), I.generators.end(), q) == I.generators.end()) I.generators.push_back(q);
    }
  return I;
}

inline Ideal degeneracy_ideal(const Chart& c) { return degeneracy_ideal(poisson_matrix(c)); }

/// First coordinate f with f^2 in I and f not in I.
inline std::optional<std::string> nonreduced_witness(const Ideal& I, const Deadline& deadline = {}) {
  const GroebnerBasis gb = buchberger(I, deadline);
  for (int k = 0; k < I.ring->size(); ++k) {
    const Polynomial f = Polynomial::variable(I.ring, k);
    if (gb.contains(f * f) && !gb.contains(f)) return I.ring->variables()[k];
  }
  return std::nullopt;
}

inline std::optional<std::string> nonreduced_witness(const Chart& c, const Deadline& deadline = {}) {
  return nonreduced_witness(degeneracy_ideal(c), deadline);
}

/// Sum over cyclic (a, b, c) of {x_a, {x_b, x_c}} for every triple a < b < c;
/// returns the triples where it does not vanish.
inline std::vector<std::array<int, 3>> jacobi_defects(const PoissonMatrix& pm) {
  const int N = pm.size();
  auto bracket_with = [&](int a, const Polynomial& F) {
    Polynomial out(pm.chart.ring);
    for (int d = 0; d < N; ++d)
      if (!pm(a, d).is_zero()) out = out + pm(a, d) * partial_derivative(F, d);
    return out;
  };
  std::vector<std::array<int, 3>> bad;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      for (int c = b + 1; c < N; ++c) {
        const Polynomial s = bracket_with(a, pm(b, c)) + bracket_with(b, pm(c, a)) + bracket_with(c, pm(a, b));
        if (!s.is_zero()) bad.push_back({a, b, c});
      }
  return bad;
}

/// Torus weight e_j - e_i of x_ij, as a vector of length n+1.
inline std::vector<int> coordinate_weight(const Chart& c, int k) {
  std::vector<int> w(c.n + 1, 0);
  const auto [i, j] = c.index.at(k);
  ++w[j - 1];
  --w[i - 1];
  return w;
}

/// Every term of {x_a, x_b} has weight wt(x_a) + wt(x_b).
inline bool is_torus_homogeneous(const PoissonMatrix& pm) {
  const Chart& c = pm.chart;
  for (int a = 0; a < pm.size(); ++a)
    for (int b = 0; b < pm.size(); ++b) {
      std::vector<int> target = coordinate_weight(c, a);
      const std::vector<int> wb = coordinate_weight(c, b);
      for (int k = 0; k <= c.n; ++k) target[k] += wb[k];
      for (const auto& t : pm(a, b).terms()) {
        std::vector<int> w(c.n + 1, 0);
        for (int k = 0; k < c.size(); ++k) {
          const std::vector<int> wk = coordinate_weight(c, k);
          for (int r = 0; r <= c.n; ++r) w[r] += t.m[k] * wk[r];
        }
        if (w != target) return false;
      }
    }
  return true;
}

struct ChartReport {
  std::string cell;
  std::size_t generators = 0;
  std::optional<std::string> witness;
  bool timed_out = false;
};

/// Every chart of SL_{n+1}/B_+, in lexicographic order of the one-line
/// notation.  A Groebner timeout is recorded on the chart and the scan
/// continues.
inline std::vector<ChartReport> scan_cells(int n, double timeout_secs = 60, unsigned workers = 0) {
  if (n < 1 || n > 4) throw InvalidInput("scan_cells: n must be between 1 and 4");
  std::vector<int> perm(n + 1);
  for (int k = 0; k <= n; ++k) perm[k] = k + 1;
  std::vector<std::string> cells;
  do {
    std::string s;
    for (int x : perm) s += std::to_string(x);
    cells.push_back(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<ChartReport> out(cells.size());
  parallel_for(cells.size(), workers, [&](std::size_t k) {
    ChartReport r;
    r.cell = cells[k];
    const Ideal I = degeneracy_ideal(make_chart(n, cells[k]));
    r.generators = I.generators.size();
    try {
      r.witness = nonreduced_witness(I, Deadline::after(timeout_secs));
    } catch (const Timeout&) {
      r.timed_out = true;
    }
    out[k] = std::move(r);
  });
  return out;
}

/// Known decomposition of the big-cell ideal for n = 2 and n = 3.
inline std::vector<Ideal> big_cell_components(int n) {
  const RingPtr R = make_chart(n).ring;
  if (n == 2)
    return {Ideal::parse(R, {"x32", "x31"}), Ideal::parse(R, {"x31", "x21"}),
            Ideal::parse(R, {"x32^2", "x31*x32", "x21*x32 - 2*x31", "x21*x31", "x21^2"})};
  if (n == 3)
    return {Ideal::parse(R, {"x42", "x41", "x32", "x31"}), Ideal::parse(R, {"x43", "x42", "x41", "x31", "x21"}),
            Ideal::parse(R, {"x43^2", "x42*x43", "x41*x43", "x32*x43 - 2*x42", "x31*x43 - 2*x41", "x41*x42",
                             "x32*x42", "x21*x42 - 2*x41", "x32*x41", "x31*x41", "x21*x41", "x32^2", "x31*x32",
                             "x21*x32 - 2*x31", "x21*x31", "x21^2"})};
  throw InvalidInput("big_cell_components: only n = 2, 3 are tabulated");
}

struct DecompositionReport {
  std::vector<bool> contained;         // I inside each component
  std::optional<bool> equal;           // unset when the intersection timed out
  bool ok() const {
    return equal.value_or(false) && std::all_of(contained.begin(), contained.end(), [](bool b) { return b; });
  }
};

/// Checks I inside each component, then I == intersection of the components.
/// The equality step honours the deadline; a timeout leaves `equal` unset.
inline DecompositionReport verify_big_cell_decomposition(int n, const Deadline& deadline = {}) {
  const Ideal I = degeneracy_ideal(make_chart(n));
  const std::vector<Ideal> comps = big_cell_components(n);
  DecompositionReport rep;
  for (const auto& J : comps) rep.contained.push_back(ideal_contains(J, I, deadline));
  try {
    rep.equal = ideal_equal(I, intersect(comps, deadline), deadline);
  } catch (const Timeout&) {
  }
  return rep;
}

inline bool verify_sl3_decomposition() { return verify_big_cell_decomposition(2).ok(); }

}  // namespace flagdeg
