#pragma once

// Explicit top-dimensional GCR pair (v, w0 v) built from the cascade,
// without enumerating W.

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "flagdeg/cascade.hpp"
#include "flagdeg/enumerate.hpp"
#include "flagdeg/gcr.hpp"
#include "flagdeg/weyl.hpp"

namespace flagdeg {

/// An irreducible subsystem relabelled in Bourbaki order. Simple root k+1 of
/// `local` is basis[k], written in the parent's coordinates.
struct SubsystemPiece {
  std::shared_ptr<const RootSystem> local;
  std::vector<Root> basis;

  Root to_parent(const Root& r) const {
    Coords c(basis.empty() ? 0 : basis.front().coords.size(), 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += r.coords[k] * basis[k].coords[i];
    return Root{std::move(c)};
  }
};

/// Splits the subsystem with simple roots `simple` into irreducible pieces.
inline std::vector<SubsystemPiece> split_into_pieces(const RootSystem& parent, const std::vector<Root>& simple) {
  const int k = static_cast<int>(simple.size());
  IntMatrix c(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const long num = 2 * parent.pairing(simple[a], simple[b]), den = parent.norm2(simple[a]);
      if (num % den != 0) throw VerificationFailure("split_into_pieces: non-integral Cartan entry");
      c(a, b) = static_cast<int>(num / den);
    }
  std::vector<SubsystemPiece> out;
  if (k == 0) return out;
  for (const auto& dc : identify_dynkin(c)) {
    SubsystemPiece piece;
    piece.local = std::make_shared<const RootSystem>(CartanType({dc.type}));
    for (int node : dc.nodes) piece.basis.push_back(simple[node]);
    const IntMatrix& expected = piece.local->cartan();
    for (int a = 0; a < dc.type.rank; ++a)
      for (int b = 0; b < dc.type.rank; ++b)
        if (expected(a, b) != c(dc.nodes[a], dc.nodes[b]))
          throw VerificationFailure("split_into_pieces: labelling of " + dc.type.str() + " does not match Bourbaki");
    out.push_back(std::move(piece));
  }
  return out;
}

inline Root highest_root(const RootSystem& rs) {
  const auto hs = rs.highest_roots();
  if (hs.size() != 1) throw InvalidInput("highest_root: root system is not simple");
  return hs.front();
}

/// Reduced word u of length h^vee - 2 with every root of u inside
/// E(theta) minus theta.  Simply-laced types use the greedy height descent
/// (smallest admissible index); the others use fixed words.
inline Word build_u_for_theta(const RootSystem& rs) {
  if (!rs.type().is_simple()) throw InvalidInput("build_u_for_theta: root system is not simple");
  const SimpleType t = rs.type().components().front();
  const int n = t.rank;
  const int hv = dual_coxeter_number(t);
  const Root theta = highest_root(rs);
  Word u;
  switch (t.letter) {
    case 'A':
    case 'D':
    case 'E': {
      Root beta = theta;
      for (int k = 0; k < hv - 2; ++k) {
        int pick = 0;
        for (int i = 1; i <= n && !pick; ++i)
          if (beta.coords[i - 1] != 0 && rs.pairing(rs.simple_root(i), beta) > 0) pick = i;
        if (!pick) throw VerificationFailure("build_u_for_theta: greedy step found no simple root");
        Root next{rs.reflect(rs.simple_root(pick), beta.coords)};
        --beta.coords[pick - 1];
        if (next != beta) throw VerificationFailure("build_u_for_theta: reflection does not lower the height by one");
        u.letters.push_back(pick);
      }
      break;
    }
    case 'B':
      for (int i = 2; i <= n; ++i) u.letters.push_back(i);
      for (int i = 1; i <= n - 2; ++i) u.letters.push_back(i);
      break;
    case 'C':
      for (int i = 1; i <= n - 1; ++i) u.letters.push_back(i);
      break;
    case 'F':
      u.letters = {1, 2, 3, 4, 2, 3, 1};
      break;
    case 'G':
      // s_1 s_2 with the long root labelled 1; Bourbaki labels it 2.
      u.letters = {2, 1};
      break;
  }

  const WeylGroup g(std::make_shared<const RootSystem>(rs));
  if (!g.is_reduced(u) || static_cast<int>(u.size()) != hv - 2)
    throw VerificationFailure("build_u_for_theta: word " + to_string(u) + " is not reduced of length h^vee - 2");
  for (const auto& beta : g.roots_of_word(u))
    if (beta == theta || rs.pairing(beta, theta) <= 0)
      throw VerificationFailure("build_u_for_theta: root " + to_string(beta) + " of u lies outside E(theta)");
  return u;
}

struct OrthogonalSubsystem {
  Root theta;
  Root u_inv_theta;
  std::vector<Root> positive;  // positive roots orthogonal to u^{-1}(theta)
  std::vector<Root> simple;    // its simple system
  std::vector<Root> dominance_minimal;  // minimal elements of Delta'_+ in the dominance order
  std::vector<SubsystemPiece> pieces;
};

/// Delta' = roots orthogonal to u^{-1}(theta), with simple system
/// {beta in Delta'_+ : every positive gamma with beta - gamma in Delta_+ is
/// not orthogonal to u^{-1}(theta)}.
/// Checks that these are exactly the indecomposable roots of Delta'_+, that
/// they generate Delta'_+, that u(Delta'_+) is positive and that the cascade
/// of Delta' is u^{-1} of the cascade of rs minus theta.
inline OrthogonalSubsystem orthogonal_subsystem(const RootSystem& rs, const Word& u) {
  const WeylGroup g(std::make_shared<const RootSystem>(rs));
  const WeylElement ue = g.from_word(u);
  const WeylElement uinv = g.inverse(ue);
  OrthogonalSubsystem out;
  out.theta = highest_root(rs);
  out.u_inv_theta = g.act(uinv, out.theta);
  const Root& x = out.u_inv_theta;

  for (const auto& beta : rs.positive_roots())
    if (rs.orthogonal(beta, x)) out.positive.push_back(beta);
  const std::set<Root> perp(out.positive.begin(), out.positive.end());

  auto below = [](const Root& gamma, const Root& beta) {  // beta - gamma in Q_+ minus 0
    if (gamma == beta) return false;
    for (std::size_t i = 0; i < beta.coords.size(); ++i)
      if (gamma.coords[i] > beta.coords[i]) return false;
    return true;
  };
  auto minus = [](const Root& beta, const Root& gamma) {
    Coords rest(beta.coords);
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= gamma.coords[i];
    return Root{std::move(rest)};
  };
  // gamma < beta read as: beta - gamma is a positive root.
  for (const auto& beta : out.positive) {
    bool keep = true;
    for (const auto& gamma : rs.positive_roots())
      if (below(gamma, beta) && rs.positive_id(minus(beta, gamma).coords) && rs.orthogonal(gamma, x)) {
        keep = false;
        break;
      }
    if (keep) out.simple.push_back(beta);
  }
  // Literal dominance-order reading, kept for comparison only.
  for (const auto& beta : out.positive) {
    bool keep = true;
    for (const auto& gamma : rs.positive_roots())
      if (below(gamma, beta) && rs.orthogonal(gamma, x)) {
        keep = false;
        break;
      }
    if (keep) out.dominance_minimal.push_back(beta);
  }

  std::vector<Root> indecomposable;
  for (const auto& beta : out.positive) {
    bool sum = false;
    for (const auto& gamma : out.positive)
      if (below(gamma, beta) && perp.count(minus(beta, gamma))) {
        sum = true;
        break;
      }
    if (!sum) indecomposable.push_back(beta);
  }
  if (indecomposable != out.simple)
    throw VerificationFailure("orthogonal_subsystem: simple roots differ from indecomposable roots");

  for (const auto& beta : out.positive)
    if (!g.act(ue, beta).is_positive())
      throw VerificationFailure("orthogonal_subsystem: u sends " + to_string(beta) + " to a negative root");

  out.pieces = split_into_pieces(rs, out.simple);
  std::set<Root> generated, sub_cascade;
  for (const auto& piece : out.pieces) {
    for (const auto& r : piece.local->positive_roots()) generated.insert(piece.to_parent(r));
    for (const auto& gamma : build_cascade(*piece.local).roots()) sub_cascade.insert(piece.to_parent(gamma));
  }
  if (generated != perp) throw VerificationFailure("orthogonal_subsystem: simple roots do not generate Delta'_+");

  std::set<Root> expected;
  for (const auto& gamma : build_cascade(rs).roots())
    if (gamma != out.theta) expected.insert(g.act(uinv, gamma));
  if (expected != sub_cascade)
    throw VerificationFailure("orthogonal_subsystem: cascade of Delta' is not u^{-1}(B minus theta)");
  return out;
}

namespace detail {

/// Product of s_{basis[letter]} over a reduced word of x in the piece.
inline WeylElement lift(const WeylGroup& parent, const SubsystemPiece& piece, const WeylElement& x) {
  const WeylGroup local(piece.local);
  WeylElement out = parent.identity();
  for (int letter : local.reduced_word(x).letters)
    out = parent.multiply(out, parent.reflection(piece.basis[letter - 1]));
  return out;
}

/// Delta_+^v = Delta_+ cap v(Delta_-).
inline std::set<Root> delta_plus(const WeylGroup& g, const WeylElement& v) {
  const auto inv = g.inversion_set(v);
  return {inv.begin(), inv.end()};
}

}  // namespace detail

/// v = u v' for a simple root system, v' built recursively on Delta' and
/// lifted through reflections in its simple roots.
inline WeylElement build_v_simple(const RootSystem& rs) {
  const WeylGroup g(std::make_shared<const RootSystem>(rs));
  const Word u = build_u_for_theta(rs);
  const OrthogonalSubsystem sub = orthogonal_subsystem(rs, u);
  const WeylElement ue = g.from_word(u);
  WeylElement vprime = g.identity();
  std::set<Root> image;  // u(Delta'^{v'}_+), inversions of v' taken inside Delta'
  for (const auto& piece : sub.pieces) {
    const WeylGroup local(piece.local);
    const WeylElement vp = build_v_simple(*piece.local);
    vprime = g.multiply(vprime, detail::lift(g, piece, vp));
    for (const auto& beta : local.inversion_set(vp)) {
      const Root r = g.act(ue, piece.to_parent(beta));
      if (!r.is_positive()) throw VerificationFailure("build_v: u(Delta'^{v'}_+) is not positive");
      image.insert(r);
    }
  }

  // u(Delta'^{v'}_+) meets each Heisenberg pair outside E(theta) exactly once.
  const Cascade c = build_cascade(rs);
  for (const auto& mu : c.nodes.front().e_set)
    if (image.count(mu)) throw VerificationFailure("build_v: u(Delta'^{v'}_+) meets E(theta)");
  for (std::size_t k = 1; k < c.nodes.size(); ++k)
    for (const auto& [mu, nu] : c.nodes[k].heisenberg_pairs)
      if (image.count(mu) + image.count(nu) != 1)
        throw VerificationFailure("build_v: u(Delta'^{v'}_+) misses the pair {" + to_string(mu) + ", " + to_string(nu) +
                                  "}");
  return g.multiply(ue, vprime);
}

/// Product of build_v_simple over the simple components.
inline WeylElement build_v(const WeylGroup& g) {
  const RootSystem& rs = g.root_system();
  std::vector<Root> simple;
  for (int i = 1; i <= rs.rank(); ++i) simple.push_back(rs.simple_root(i));
  WeylElement v = g.identity();
  for (const auto& piece : split_into_pieces(rs, simple))
    v = g.multiply(v, detail::lift(g, piece, build_v_simple(*piece.local)));
  return v;
}

struct HeisenbergChoice {
  Root gamma;   // cascade root owning the pair
  Root mu, nu;  // the pair
  Root chosen;  // the member inverted by v^{-1}
};

struct TopPair {
  WeylElement v, w;
  Word v_word, w_word;
  int d = 0;
  int num_positive = 0;
  int cascade_size = 0;
  std::vector<HeisenbergChoice> certificate;
};

/// (v, w0 v) with l(w) - l(v) = |B|; asserts cond3 membership.
inline TopPair build_top_pair(const WeylGroup& g) {
  const RootSystem& rs = g.root_system();
  TopPair tp;
  tp.v = build_v(g);
  tp.w = g.multiply(g.longest_element(), tp.v);
  tp.v_word = g.reduced_word(tp.v);
  tp.w_word = g.reduced_word(tp.w);
  tp.num_positive = rs.num_positive_roots();
  const Cascade c = build_cascade(rs);
  tp.cascade_size = static_cast<int>(c.size());
  tp.d = tp.w.length() - tp.v.length();

  const auto dv = detail::delta_plus(g, tp.v);
  for (const auto& node : c.nodes) {
    if (dv.count(node.gamma)) throw VerificationFailure("build_top_pair: Delta_+^v meets the cascade");
    for (const auto& [mu, nu] : node.heisenberg_pairs) {
      if (dv.count(mu) + dv.count(nu) != 1)
        throw VerificationFailure("build_top_pair: Heisenberg pair not split by v");
      tp.certificate.push_back({node.gamma, mu, nu, dv.count(mu) ? mu : nu});
    }
  }
  if (2 * tp.v.length() != tp.num_positive - tp.cascade_size)
    throw VerificationFailure("build_top_pair: l(v) != (N - m) / 2");
  if (tp.d != tp.cascade_size) throw VerificationFailure("build_top_pair: l(w) - l(v) != |B|");
  if (g.reflection_length(g.longest_element()) != tp.cascade_size)
    throw VerificationFailure("build_top_pair: |B| != reflection length of w0");
  if (!is_gcr_cond3(g, tp.v, tp.w)) throw VerificationFailure("build_top_pair: (v, w) fails the kernel condition");
  return tp;
}

/// Largest reflection length over the involutions of an enumerated group.
inline int max_involution_reflection_length(const EnumeratedGroup& G) {
  const WeylGroup& g = G.group();
  int best = 0;
  for (const auto& w : G.elements())
    if (g.is_involution(w)) best = std::max(best, g.reflection_length(w));
  return best;
}

}  // namespace flagdeg
