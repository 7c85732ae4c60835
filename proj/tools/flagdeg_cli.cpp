// flagdeg: command-line front end.
//
// Exit codes: 0 success, 1 bad input, 2 cap or timeout, 3 a verification
// failed.  Output is deterministic for a given command line.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <set>

#include "flagdeg/flagdeg.hpp"

using namespace flagdeg;

namespace {

struct RunConfig {
  std::string type;
  std::string format = "text";
  std::uint64_t cap = kDefaultGroupCap;
  double timeout_secs = 60;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  // subcommand arguments
  std::string v, w;
  std::string parabolic;
  std::string cell;
  std::size_t sample = 0;
};

/// Raised when a check reported by a subcommand failed.
struct ChecksFailed {};

std::shared_ptr<const BruhatOrder> make_order(const RunConfig& cfg) {
  auto G = std::make_shared<const EnumeratedGroup>(WeylGroup(cfg.type), cfg.cap);
  return std::make_shared<const BruhatOrder>(std::move(G));
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw InvalidInput("format '" + cfg.format + "' is not available for this command");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string status(bool ok) { return ok ? "pass" : "fail"; }

/// Prints the traceability block and throws when any check failed.
void finish(Json& out, const Json& trace, const RunConfig& cfg, const std::string& text) {
  bool ok = true;
  for (const auto& [k, v] : trace.items()) ok = ok && v == "pass";
  out["traceability"] = trace;
  if (cfg.format == "json") {
    emit(out);
  } else {
    std::cout << text;
    for (const auto& [k, v] : trace.items()) std::cout << k << ": " << v.get<std::string>() << "\n";
  }
  if (!ok) throw ChecksFailed{};
}

std::string pair_text(const WeylGroup& g, const GcrPair& p) {
  return element_label(g, p.v) + " " + element_label(g, p.w) + " d=" + std::to_string(p.d) + "\n";
}

void list_pairs(const RunConfig& cfg, const WeylGroup& g, const std::vector<GcrPair>& pairs, const std::string& key) {
  require_format(cfg, {"text", "json", "csv"});
  if (cfg.format == "csv") {
    std::cout << gcr_csv(g, pairs);
  } else if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& p : pairs) arr.push_back(to_json(g, p));
    emit(Json{{"type", cfg.type}, {"count", pairs.size()}, {key, arr}});
  } else {
    for (const auto& p : pairs) std::cout << pair_text(g, p);
    std::cout << "count " << pairs.size() << "\n";
  }
}

void cmd_gcr_enumerate(const RunConfig& cfg) {
  const GcrPoset poset = enumerate_gcr(make_order(cfg), cfg.workers);
  list_pairs(cfg, poset.order().group().group(), poset.pairs(), "pairs");
}

void cmd_gcr_components(const RunConfig& cfg) {
  const GcrPoset poset = enumerate_gcr(make_order(cfg), cfg.workers);
  list_pairs(cfg, poset.order().group().group(), maximal_pairs(poset), "maximal_pairs");
}

void cmd_gcr_check(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const WeylGroup g(cfg.type);
  const WeylElement v = parse_element(g, cfg.v), w = parse_element(g, cfg.w);
  if (!bruhat_leq(g, v, w)) throw InvalidInput("v is not below w in the Bruhat order");
  const bool c3 = is_gcr_cond3(g, v, w), c4 = is_gcr_cond4(g, v, w);
  const auto c6 = is_gcr_cond6(g, v, w);
  Json out{{"type", cfg.type},
           {"v", element_label(g, v)},
           {"w", element_label(g, w)},
           {"length_difference", w.length() - v.length()},
           {"kernel_condition", c3},
           {"reflection_length_condition", c4},
           {"orthogonal_subword_condition", c6.has_value()},
           {"gcr", c3}};
  if (c6) out["witness"] = to_json(g, *c6);
  std::string text = element_label(g, v) + " <= " + element_label(g, w) + ": " + (c3 ? "GCR" : "not GCR") + "\n";
  finish(out, Json{{"gcr.conditions_agree", status(c3 == c4 && c4 == c6.has_value())}}, cfg, text);
}

void cmd_gcr_powerset(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const GcrPoset poset = enumerate_gcr(make_order(cfg), cfg.workers);
  const WeylGroup& g = poset.order().group().group();
  std::vector<std::size_t> idx(poset.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  if (cfg.sample && cfg.sample < idx.size()) {
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(cfg.sample);
    std::sort(idx.begin(), idx.end());
  }
  std::size_t bad = 0;
  Json failures = Json::array();
  for (std::size_t k : idx) {
    const GcrPair& p = poset.pairs()[k];
    if (!verify_powerset_interval(poset.order(), p)) {
      ++bad;
      failures.push_back(to_json(g, p));
    }
  }
  Json out{{"type", cfg.type}, {"checked", idx.size()}, {"failures", failures}};
  finish(out, Json{{"gcr.powerset_interval", status(bad == 0)}}, cfg,
         "checked " + std::to_string(idx.size()) + " pairs, " + std::to_string(bad) + " failures\n");
}

void cmd_cascade(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const WeylGroup g(cfg.type);
  const Cascade c = build_cascade(g.root_system());
  const KostantReport rep = verify_kostant(g, c);
  Json out{{"type", cfg.type}, {"cascade", to_json(c)}, {"kostant", to_json(rep)}};
  std::string text;
  for (const auto& n : c.nodes)
    text += to_string(n.gamma) + "  " + n.support_type.str() + "  |E|=" + std::to_string(n.e_set.size()) +
            "  pairs=" + std::to_string(n.heisenberg_pairs.size()) + "\n";
  text += "cascade size " + std::to_string(rep.cascade_size) + ", reflection length of w0 " +
          std::to_string(rep.reflection_length_w0) + "\n";
  finish(out,
         Json{{"cascade.product_is_w0", status(rep.product_is_w0)},
              {"cascade.partition", status(rep.partition)},
              {"cascade.strongly_orthogonal", status(rep.strongly_orthogonal && rep.reflections_commute)},
              {"cascade.e_sizes", status(rep.e_sizes)},
              {"cascade.heisenberg_matching", status(rep.matching && rep.pairing_is_one)},
              {"cascade.size_is_reflection_length", status(rep.cascade_size == rep.reflection_length_w0)}},
         cfg, text);
}

void cmd_rpoly(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const auto order = make_order(cfg);
  const WeylGroup& g = order->group().group();
  const WeylElement v = parse_element(g, cfg.v), w = parse_element(g, cfg.w);
  const QPolynomial deodhar = order->leq(v, w) ? r_polynomial_deodhar(g, v, w) : QPolynomial();
  const QPolynomial rec = RPolynomialRecurrence(order)(v, w);
  const bool agree = deodhar == rec;
  Json out{{"type", cfg.type},
           {"v", element_label(g, v)},
           {"w", element_label(g, w)},
           {"deodhar", to_json(deodhar)},
           {"recurrence", to_json(rec)},
           {"agree", agree}};
  Json trace{{"rpoly.deodhar_equals_recurrence", status(agree)}};
  if (auto p = is_gcr_cond6(g, v, w))
    trace["rpoly.gcr_is_q_minus_one_power"] = status(deodhar == QPolynomial::q_minus_one_pow(p->d));
  finish(out, trace, cfg, "R = " + deodhar.str() + " (recurrence " + rec.str() + ")\n");
}

void cmd_parabolic(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "csv"});
  const auto order = make_order(cfg);
  const WeylGroup& g = order->group().group();
  const ParabolicOrder P(order, ParabolicSubset::parse(g.rank(), cfg.parabolic));
  const GcrPoset poset = enumerate_gcr(order, cfg.workers);
  const auto pairs = gcr_p(poset, P);
  bool intervals = true, classes = true, levi = true;
  for (const auto& p : pairs) {
    intervals = intervals && verify_p_interval(P, p);
    classes = classes && verify_classes_distinct(P, p);
    levi = levi && witness_roots_avoid_levi(g, p, P.subset());
  }
  if (cfg.format == "csv") {
    std::cout << gcr_csv(g, pairs);
    if (!(intervals && classes && levi)) throw ChecksFailed{};
    return;
  }
  Json arr = Json::array();
  std::string text;
  for (const auto& p : pairs) {
    arr.push_back(to_json(g, p));
    text += pair_text(g, p);
  }
  text += "count " + std::to_string(pairs.size()) + "\n";
  Json out{{"type", cfg.type}, {"parabolic", P.subset().str()}, {"count", pairs.size()}, {"pairs", arr}};
  finish(out,
         Json{{"parabolic.interval_equals_bruhat", status(intervals)},
              {"parabolic.classes_distinct", status(classes)},
              {"parabolic.witness_roots_avoid_levi", status(levi)}},
         cfg, text);
}

void cmd_top_pair(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const WeylGroup g(cfg.type);
  const TopPair t = build_top_pair(g);
  const int bound = g.reflection_length(g.longest_element());
  Json out = to_json(g, t);
  std::string text = "v = " + to_string(t.v_word) + "\nw = " + to_string(t.w_word) + "\nd = " + std::to_string(t.d) +
                     "\n";
  finish(out, Json{{"construct.d_equals_cascade_size", status(t.d == t.cascade_size && t.d == bound)}}, cfg, text);
}

int type_a_rank(const RunConfig& cfg) {
  const CartanType t = CartanType::parse(cfg.type);
  if (t.components().size() != 1 || t.components()[0].letter != 'A')
    throw InvalidInput("the Poisson commands need a simple type A_n");
  return t.components()[0].rank;
}

void cmd_poisson_matrix(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const int n = type_a_rank(cfg);
  const Chart c = cfg.cell.empty() ? make_chart(n) : make_chart(n, cfg.cell);
  const PoissonMatrix pm = poisson_matrix(c);
  const bool jacobi = jacobi_defects(pm).empty();
  Json out = to_json(pm);
  finish(out,
         Json{{"poisson.antisymmetric", status(pm.is_antisymmetric())},
              {"poisson.jacobi", status(jacobi)},
              {"poisson.torus_homogeneous", status(is_torus_homogeneous(pm))}},
         cfg, "π = " + pm.bivector_string() + "\n");
}

void cmd_poisson_ideal(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const int n = type_a_rank(cfg);
  const Chart c = cfg.cell.empty() ? make_chart(n) : make_chart(n, cfg.cell);
  const Ideal I = degeneracy_ideal(c);
  const auto witness = nonreduced_witness(I, Deadline::after(cfg.timeout_secs));
  Json out{{"type", cfg.type}, {"cell", c.cell()}, {"ideal", to_json(I)},
           {"witness", witness ? Json(*witness) : Json(nullptr)}};
  if (cfg.format == "json") {
    emit(out);
  } else {
    std::cout << I.str() << "\nwitness " << (witness ? *witness : "none") << "\n";
  }
}

void cmd_poisson_scan(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "csv"});
  const int n = type_a_rank(cfg);
  const auto reports = scan_cells(n, cfg.timeout_secs, cfg.workers);
  std::size_t with = 0, timed_out = 0;
  for (const auto& r : reports) {
    with += r.witness.has_value();
    timed_out += r.timed_out;
  }
  if (cfg.format == "csv") {
    std::cout << csv_row({"cell", "generators", "witness", "timed_out"});
    for (const auto& r : reports)
      std::cout << csv_row({r.cell, std::to_string(r.generators), r.witness.value_or(""), r.timed_out ? "1" : "0"});
  } else if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    emit(Json{{"type", cfg.type}, {"charts", arr}, {"with_witness", with}, {"timed_out", timed_out}});
  } else {
    for (const auto& r : reports)
      std::cout << r.cell << "  " << (r.timed_out ? "timeout" : r.witness.value_or("-")) << "\n";
    std::cout << "charts with witness " << with << " of " << reports.size() << "\n";
  }
  if (timed_out) throw Timeout("poisson scan: " + std::to_string(timed_out) + " charts timed out");
}

void cmd_graph(const RunConfig& cfg) {
  require_format(cfg, {"text", "dot"});
  const auto order = make_order(cfg);
  const GcrPoset poset = enumerate_gcr(order, cfg.workers);
  std::set<std::pair<int, int>> highlight;
  for (const auto& p : maximal_pairs(poset))
    if (p.d == 1) highlight.emplace(p.v_id, p.w_id);
  std::cout << export_bruhat_graph(*order, highlight);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of Poisson degeneracy loci of flag varieties"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  app.add_option("--cap", cfg.cap, "Largest Weyl group to enumerate");
  app.add_option("--timeout-secs", cfg.timeout_secs, "Groebner basis time limit per run");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");
  app.add_option("--workers", cfg.workers, "Worker threads, 0 for all cores");

  std::function<void(const RunConfig&)> action;
  auto leaf = [&](CLI::App* parent, const char* name, const char* help, void (*fn)(const RunConfig&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("type", cfg.type, "Cartan type, e.g. A3 or A2xB3")->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  CLI::App* gcr = app.add_subcommand("gcr", "GCR pairs")->require_subcommand(1);
  leaf(gcr, "enumerate", "All GCR pairs", cmd_gcr_enumerate);
  leaf(gcr, "components", "Maximal GCR pairs", cmd_gcr_components);
  CLI::App* check = leaf(gcr, "check", "Test one pair v <= w", cmd_gcr_check);
  check->add_option("v", cfg.v)->required();
  check->add_option("w", cfg.w)->required();
  CLI::App* powerset = leaf(gcr, "powerset", "Verify power-set intervals", cmd_gcr_powerset);
  powerset->add_option("--sample", cfg.sample, "Check a seeded sample of this many pairs");

  leaf(&app, "cascade", "Kostant cascade", cmd_cascade);

  CLI::App* rpoly = leaf(&app, "rpoly", "R-polynomial R_{v,w}", cmd_rpoly);
  rpoly->add_option("v", cfg.v)->required();
  rpoly->add_option("w", cfg.w)->required();

  CLI::App* parabolic = leaf(&app, "parabolic", "GCR_P pairs", cmd_parabolic);
  parabolic->add_option("--parabolic", cfg.parabolic, "Simple indices of W_P, e.g. 1,3");

  CLI::App* construct = app.add_subcommand("construct", "Explicit constructions")->require_subcommand(1);
  leaf(construct, "top-pair", "A GCR pair of top dimension", cmd_top_pair);

  CLI::App* poisson = app.add_subcommand("poisson", "Type A Poisson bivector")->require_subcommand(1);
  leaf(poisson, "matrix", "Bivector on a chart", cmd_poisson_matrix)->add_option("--cell", cfg.cell);
  leaf(poisson, "ideal", "Degeneracy ideal and witness", cmd_poisson_ideal)->add_option("--cell", cfg.cell);
  leaf(poisson, "scan", "Witness scan over all charts", cmd_poisson_scan);

  leaf(&app, "graph", "Bruhat graph in DOT", cmd_graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    action(cfg);
  } catch (const ChecksFailed&) {
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Timeout& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
