#pragma once

// JSON and CSV renderings.  All numbers are exact: integers stay
// integers and rationals are written as "p/q" strings.

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "flagdeg/cascade.hpp"
#include "flagdeg/construct.hpp"
#include "flagdeg/deodhar.hpp"
#include "flagdeg/gcr.hpp"
#include "flagdeg/poisson.hpp"

namespace flagdeg {

using Json = nlohmann::ordered_json;

inline std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

/// Inverse of element_label.  Accepts "e", a word "(1,2,1)" or "s1s2s1",
/// or one-line notation in type A.
inline WeylElement parse_element(const WeylGroup& g, const std::string& text) {
  auto bad = [&]() { return InvalidInput("cannot parse Weyl element '" + text + "'"); };
  if (text == "e") return g.identity();
  Word w;
  if (text.front() == '(' && text.back() == ')') {
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) throw bad();
      w.letters.push_back(std::stoi(tok));
    }
  } else if (text.front() == 's') {
    std::stringstream ss(text.substr(1));
    std::string tok;
    while (std::getline(ss, tok, 's')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) throw bad();
      w.letters.push_back(std::stoi(tok));
    }
  } else if (g.is_type_a()) {
    return g.from_one_line(text);
  } else {
    throw bad();
  }
  for (int i : w.letters)
    if (i < 1 || i > g.rank()) throw bad();
  return g.from_word(w);
}

inline Json to_json(const Root& r) { return Json(r.coords); }
inline Json to_json(const Word& w) { return Json(w.letters); }

inline Json to_json(const WeylGroup& g, const GcrPair& p) {
  Json roots = Json::array();
  for (const auto& r : p.witness_roots) roots.push_back(to_json(r));
  return Json{{"v", element_label(g, p.v)},
              {"w", element_label(g, p.w)},
              {"d", p.d},
              {"host", to_json(p.host)},
              {"positions", p.positions},
              {"witness_roots", roots}};
}

inline Json to_json(const QPolynomial& p) {
  return Json{{"coefficients", p.coefficients()}, {"text", p.str()}};
}

inline Json to_json(const Cascade& c) {
  Json nodes = Json::array();
  for (const auto& n : c.nodes) {
    Json pairs = Json::array();
    for (const auto& [mu, nu] : n.heisenberg_pairs) pairs.push_back(Json::array({to_json(mu), to_json(nu)}));
    nodes.push_back(Json{{"gamma", to_json(n.gamma)},
                         {"support", n.support},
                         {"support_type", n.support_type.str()},
                         {"dual_coxeter", n.dual_coxeter},
                         {"e_size", n.e_set.size()},
                         {"heisenberg_pairs", pairs},
                         {"parent", n.parent}});
  }
  return Json{{"size", c.size()}, {"nodes", nodes}};
}

inline Json to_json(const KostantReport& r) {
  return Json{{"product_is_w0", r.product_is_w0},
              {"reflections_commute", r.reflections_commute},
              {"partition", r.partition},
              {"strongly_orthogonal", r.strongly_orthogonal},
              {"e_sizes", r.e_sizes},
              {"pairing_is_one", r.pairing_is_one},
              {"matching", r.matching},
              {"cascade_size", r.cascade_size},
              {"reflection_length_w0", r.reflection_length_w0},
              {"ok", r.ok()}};
}

inline Json to_json(const WeylGroup& g, const TopPair& t) {
  Json cert = Json::array();
  for (const auto& h : t.certificate)
    cert.push_back(Json{{"gamma", to_json(h.gamma)}, {"mu", to_json(h.mu)}, {"nu", to_json(h.nu)},
                        {"chosen", to_json(h.chosen)}});
  return Json{{"type", g.root_system().type().str()},
              {"v_word", to_json(t.v_word)},
              {"w_word", to_json(t.w_word)},
              {"v", element_label(g, t.v)},
              {"w", element_label(g, t.w)},
              {"length_v", t.v.length()},
              {"length_w", t.w.length()},
              {"d", t.d},
              {"num_positive", t.num_positive},
              {"cascade_size", t.cascade_size},
              {"certificate", cert}};
}

inline Json to_json(const Ideal& I) {
  Json gens = Json::array();
  for (const auto& g : I.generators) gens.push_back(g.str());
  return Json{{"variables", I.ring->variables()}, {"generators", gens}};
}

inline Json to_json(const PoissonMatrix& pm) {
  Json entries = Json::array();
  const auto& vars = pm.chart.ring->variables();
  for (int a = 0; a < pm.size(); ++a)
    for (int b = 0; b < a; ++b)
      if (!pm(a, b).is_zero()) entries.push_back(Json{{"a", vars[a]}, {"b", vars[b]}, {"bracket", pm(a, b).str()}});
  return Json{{"cell", pm.chart.cell()},
              {"variables", vars},
              {"entries", entries},
              {"bivector", pm.bivector_string()}};
}

inline Json to_json(const ChartReport& r) {
  return Json{{"cell", r.cell},
              {"generators", r.generators},
              {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
              {"timed_out", r.timed_out}};
}

/// Quotes a CSV field when it contains a separator, quote or newline.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string s;
  for (std::size_t k = 0; k < fields.size(); ++k) s += (k ? "," : "") + csv_field(fields[k]);
  return s + "\n";
}

inline std::string gcr_csv(const WeylGroup& g, const std::vector<GcrPair>& pairs) {
  std::string out = csv_row({"v", "w", "d", "host", "positions"});
  for (const auto& p : pairs) {
    std::string pos;
    for (std::size_t k = 0; k < p.positions.size(); ++k) pos += (k ? " " : "") + std::to_string(p.positions[k]);
    out += csv_row({element_label(g, p.v), element_label(g, p.w), std::to_string(p.d), to_string(p.host), pos});
  }
  return out;
}

}  // namespace flagdeg
