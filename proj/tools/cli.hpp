#pragma once

#include "powerhg/powerhg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace powerhg::cli {

using nlohmann::json;

/// Bad invocation: missing flag, unreadable file, malformed value. Exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string graph_path;
  std::string json_path;
  std::string csv_path;
  std::optional<int> k, d, ell, delta;
  std::string mu = "1";
  double tol = 1e-10;
};

/// Accepts "2", "-1.5", "1+1i", "1-i", "i", "-2.5i" ('j' works as well).
inline Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  auto number = [&](const std::string& tok) {
    if (tok.empty() || tok == "+") return 1.0;
    if (tok == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError("malformed complex number '" + std::string(text) + "'");
    return v;
  };
  if (s.empty()) throw UsageError("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {number(s), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, number(s)};
  return {number(s.substr(0, split)), number(s.substr(split))};
}

inline Graph load_graph(const std::string& path) {
  if (path.empty()) throw UsageError("--graph is required for this command");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read graph file '" + path + "'");
  return parse_edge_list(in);
}

inline std::string big(const BigInt& v) { return to_decimal(v); }

inline std::string long_double_text(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", v);
  return buf;
}

inline json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

inline json input_summary(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
  return {{"n", g.order()},
          {"m", g.size()},
          {"edges", edges},
          {"class", is_connected(g) ? std::string(to_string(classify(g))) : std::string("disconnected")}};
}

inline int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required for this command");
  return *v;
}

inline json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

inline json cmd_analyze(const Graph& g) {
  require_connected(g, "analyze");
  const Spectrum s = spectrum(g);
  json r{{"class", std::string(to_string(classify(g)))},
         {"rho", s.radius()},
         {"lambda_2", s.second_largest()},
         {"lambda_min", s.smallest()},
         {"spectrum", s.values}};
  r["rho_V"] = g.order() >= 2 ? json(rho_V(g)) : json(nullptr);
  r["rho_E"] = g.size() >= 2 ? json(rho_E(g)) : json(nullptr);
  r["rho_Gamma"] = optional_number(rho_Gamma(g));
  return r;
}

inline json cmd_lambda(const Graph& g, int k) {
  json r{{"k", k}, {"lambda", lambda(g, k)}, {"rho", power_spectral_radius(g, k)}};
  if (k >= 4) {
    r["source"] = "rho_E";
    r["rho_E"] = rho_E(g);
  } else {
    const CubicLambdaCandidates c = cubic_lambda_candidates(g);
    r["source"] = "k=3 class candidates";
    r["class"] = std::string(to_string(c.graph_class));
    r["candidates"] = {{"rho_V", c.rho_V},
                       {"rho_Gamma", optional_number(c.rho_Gamma)},
                       {"minus_lambda_min", optional_number(c.minus_lambda_min)}};
  }
  return r;
}

inline json cmd_weakest(const Graph& g) {
  const WeakestEdgeReport w = weakest_edges(g);
  json edges = json::array();
  for (const WeakestEdge& e : w.edges)
    edges.push_back({{"index", e.index}, {"edge", edge_json(e.edge)}, {"delta", e.delta}, {"rho", e.rho}});
  return {{"rho_E", w.rho_E},
          {"edges", edges},
          {"rho_per_edge", w.rho_per_edge},
          {"pendant_count", w.pendant_count()},
          {"non_pendant_count", w.non_pendant_count()}};
}

inline json cmd_multiplicity(const Graph& g, int k) {
  const MultiplicityReport m = am_lambda(g, k);
  json per = json::array();
  for (const EdgeMultiplicity& e : m.per_edge) {
    per.push_back({{"index", e.edge_index},
                   {"edge", edge_json(e.edge)},
                   {"delta", e.delta},
                   {"v_rho_size", big(e.v_rho_size)},
                   {"origin_multiplicity", big(e.origin_multiplicity)},
                   {"contribution", big(e.contribution)}});
  }
  return {{"k", k},
          {"am_rho", big(m.am_rho)},
          {"am_lambda", big(m.am_lambda)},
          {"v_lambda_size", big(m.v_lambda_size)},
          {"v_lambda_total", big(m.v_lambda_total)},
          {"n0", m.n0},
          {"n1", m.n1},
          {"f0", big(m.f0)},
          {"f1", big(m.f1)},
          {"per_edge", per}};
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline void write_csv(const std::string& path, const Table& t) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write csv file '" + path + "'");
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

inline json cmd_moments(const Graph& g, int k, const Options& o, Table& table) {
  json r{{"k", k}};
  if (o.d) r["moment"] = {{"d", *o.d}, {"value", big(spectral_moment(g, k, *o.d))}};
  const int ell_max = o.ell.value_or(8);
  if (ell_max < 1) throw UsageError("--ell must be >= 1");
  table.header = {"ell", "d", "moment", "estimate"};
  json series = json::array();
  const bool estimate = k >= 4 && g.size() >= 2 && is_connected(g);
  for (int ell = 1; ell <= ell_max; ++ell) {
    json row{{"ell", ell}, {"d", k * ell}};
    std::string est_text;
    if (estimate) {
      const MomentEstimate est = moment_estimate_am_lambda(g, k, ell);
      row["moment"] = big(est.moment);
      est_text = est.exact ? to_decimal(*est.exact) : long_double_text(est.value);
      row["estimate_exact"] = est.exact.has_value();
    } else {
      row["moment"] = big(spectral_moment(g, k, k * ell));
    }
    row["estimate"] = estimate ? json(est_text) : json(nullptr);
    table.rows.push_back({std::to_string(ell), std::to_string(k * ell), row["moment"].get<std::string>(), est_text});
    series.push_back(std::move(row));
  }
  r["series"] = series;
  return r;
}

inline json cmd_eigvec(const Graph& g, int k) {
  const PowerHypergraph h(g, k);
  json pairs = json::array();
  for (const LiftedEigenpair& lp : lift_all_eigenvectors(g, k)) {
    json vec = json::array();
    for (const Complex& c : lp.pair.vector) vec.push_back({c.real(), c.imag()});
    pairs.push_back({{"edge_index", lp.edge_index},
                     {"edge", edge_json(g.edge(lp.edge_index))},
                     {"delta", lp.delta},
                     {"lambda", lp.pair.lambda.real()},
                     {"residual", lp.pair.residual},
                     {"zero_support", lp.zero_support},
                     {"vector", vec}});
  }
  return {{"k", k}, {"order", h.order()}, {"eigenpairs", pairs}};
}

inline json cmd_walks(const Graph& g, const Options& o, Table& table) {
  const int d = need(o.d, "--d");
  json r{{"d", d}, {"parity", big(parity_closed_walks(g, d).count)}, {"covering", big(covering_parity_closed_walks(g, d).count)}};
  if (o.ell) {
    table.header = {"ell", "covering_walks", "ratio"};
    json series = json::array();
    for (const RatioPoint& p : walk_ratio_series(g, *o.ell)) {
      series.push_back({{"ell", p.ell}, {"covering_walks", big(p.covering_walks)}, {"ratio", p.ratio}});
      table.rows.push_back({std::to_string(p.ell), big(p.covering_walks), long_double_text(p.ratio)});
    }
    r["ratio_series"] = series;
    r["ratio_limit"] = walk_ratio_limit(g);
  }
  return r;
}

inline json cmd_variety(const Options& o) {
  const LinkSystem sys{need(o.k, "--k"), need(o.delta, "--delta"), parse_complex(o.mu)};
  const VarietyReport rep = solve_link_variety(sys);
  bool dominant = true;
  for (const auto& p : rep.nonzero_solutions) dominant = dominant && jacobian_nonsingular(sys, p);
  return {{"k", sys.k},
          {"delta", sys.delta},
          {"mu", {sys.mu.real(), sys.mu.imag()}},
          {"variables", sys.variables()},
          {"nonzero_total", std::to_string(rep.nonzero_total)},
          {"origin_multiplicity", std::to_string(rep.origin_multiplicity)},
          {"bezout", std::to_string(rep.bezout)},
          {"max_residual", rep.max_residual},
          {"all_jacobians_dominant", dominant},
          {"expected_nonzero_total", big(link_nonzero_count(sys.k, sys.delta))},
          {"expected_origin_multiplicity", big(link_origin_multiplicity(sys.k, sys.delta))}};
}

inline json cmd_oracle(const Graph& g, int k, double tol) {
  const PowerHypergraph h(g, k);
  const IterationTrace t = power_iteration_radius(h, tol, 100000);
  json bounds = json::array();
  for (const auto& [lo, hi] : t.estimates) bounds.push_back({lo, hi});
  json r{{"k", k},
         {"power_iteration", {{"value", t.converged_value}, {"iterations", t.iterations}, {"bounds", bounds}}},
         {"rho", power_spectral_radius(g, k)}};
  r["brute_force_V_lambda"] = nullptr;
  if (k >= 4 && g.size() >= 2) {
    r["count_V_lambda_size"] = big(count_V_lambda(g, k).size);
    try {
      r["brute_force_V_lambda"] = brute_force_V_lambda(g, k);
    } catch (const PreconditionError& e) {
      r["brute_force_skipped"] = e.what();
    }
  }
  return r;
}

/// args excludes the program name. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral analysis of k-power hypergraphs", "powerhg"};
  app.require_subcommand(1);
  Options o;

  auto graph_flag = [&](CLI::App* s) { s->add_option("--graph", o.graph_path, "edge-list file"); };
  auto output_flags = [&](CLI::App* s) { s->add_option("--json", o.json_path, "write the JSON report here"); };
  auto k_flag = [&](CLI::App* s) { s->add_option("--k", o.k, "uniformity k >= 3"); };

  struct Sub {
    const char* name;
    const char* help;
    std::function<void(CLI::App*)> extra;
  };
  const std::vector<Sub> subs = {
      {"analyze", "class, rho, lambda_2, lambda_min, rho_V, rho_E, rho_Gamma", [](CLI::App*) {}},
      {"lambda", "second-largest modulus of G^(k)", k_flag},
      {"weakest-edges", "edges maximising rho(G-e)", [](CLI::App*) {}},
      {"multiplicity", "am_rho, am_Lambda and the eigenvector count", k_flag},
      {"moments", "exact spectral moments and the am_Lambda estimate",
       [&](CLI::App* s) {
         k_flag(s);
         s->add_option("--d", o.d, "single moment order");
         s->add_option("--ell", o.ell, "series length (default 8)");
         s->add_option("--csv", o.csv_path, "write the series as CSV");
       }},
      {"eigvec", "lifted Lambda-eigenpairs", k_flag},
      {"walks", "parity-closed and covering walk counts",
       [&](CLI::App* s) {
         s->add_option("--d", o.d, "walk length");
         s->add_option("--ell", o.ell, "ratio series length");
         s->add_option("--csv", o.csv_path, "write the ratio series as CSV");
       }},
      {"variety", "link-variety solution counts",
       [&](CLI::App* s) {
         k_flag(s);
         s->add_option("--delta", o.delta, "0 (pendant) or 1");
         s->add_option("--mu", o.mu, "nonzero complex mu, e.g. 1+1i");
       }},
      {"oracle", "power iteration and brute-force eigenvector count",
       [&](CLI::App* s) {
         k_flag(s);
         s->add_option("--tol", o.tol, "power-iteration gap tolerance");
       }},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (std::string_view(s.name) != "variety") graph_flag(sub);
    output_flags(sub);
    s.extra(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  json report{{"command", command}, {"version", kVersion}, {"input", json::object()}};
  Table table;
  try {
    if (command == "variety") {
      report["results"] = cmd_variety(o);
    } else {
      const Graph g = load_graph(o.graph_path);
      report["input"] = input_summary(g);
      if (command == "analyze") report["results"] = cmd_analyze(g);
      else if (command == "lambda") report["results"] = cmd_lambda(g, need(o.k, "--k"));
      else if (command == "weakest-edges") report["results"] = cmd_weakest(g);
      else if (command == "multiplicity") report["results"] = cmd_multiplicity(g, need(o.k, "--k"));
      else if (command == "moments") report["results"] = cmd_moments(g, need(o.k, "--k"), o, table);
      else if (command == "eigvec") report["results"] = cmd_eigvec(g, need(o.k, "--k"));
      else if (command == "walks") report["results"] = cmd_walks(g, o, table);
      else report["results"] = cmd_oracle(g, need(o.k, "--k"), o.tol);
    }
    report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::string text = report.dump(2) + "\n";
    if (o.json_path.empty()) {
      out << text;
    } else {
      std::ofstream f(o.json_path);
      if (!f) throw UsageError("cannot write json file '" + o.json_path + "'");
      f << text;
    }
    if (!o.csv_path.empty()) {
      if (table.header.empty()) throw UsageError("--csv needs a series (use --ell)");
      write_csv(o.csv_path, table);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "parse: " << e.what() << '\n';
    return 1;
  } catch (const InvalidGraph& e) {
    err << "parse: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "reason: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "reason: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace powerhg::cli
