#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bigcp/cli.hpp"
#include "bigcp/errors.hpp"
#include "bigcp/io.hpp"
#include "bigcp/models.hpp"
#include "bigcp/oracle.hpp"
#include "bigcp/patterns.hpp"

namespace bigcp {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text) {
  text = trim(text);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("not a number: '" + std::string(text) + "'");
  return x;
}

const std::vector<std::string> kPolynomials = {
    "independence", "independence-even", "independence-multivariate", "independence-clawfree",
    "tutte",        "spin",              "edge-coloring"};

struct Options {
  std::string command;
  std::string polynomial;
  std::string graph_path;
  std::string model_path;
  std::optional<std::string> lambda, q, w;
  double epsilon = 0.01;
  std::optional<int> m;
  double delta_margin = 0.05;
  std::optional<double> tutte_K;
  bool override_region = false;
  std::optional<std::size_t> resource_cap;
  std::optional<int> max_degree;
  std::uint64_t seed = 1;
  std::vector<int> sizes{10, 20, 40, 80};
  double avg_degree = 3.0;
  bool omit_timing = false;
  bool oracle = false;
};

Complex required_complex(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw ParseError(std::string("missing ") + flag);
  return parse_complex(*v);
}

Multigraph load_graph(const Options& o) {
  if (o.graph_path.empty()) throw ParseError("missing --graph");
  return read_graph_file(o.graph_path);
}

std::string load_model_text(const Options& o) {
  if (o.model_path.empty()) throw ParseError("missing --model for " + o.polynomial);
  return read_text_file(o.model_path);
}

/// {"weights": [w0, w1, ...]} with entries a number or [re, im].
std::vector<Complex> load_vertex_weights(const Options& o, int n) {
  json doc;
  try {
    doc = json::parse(load_model_text(o));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("model file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_array())
    throw ParseError("model file needs a \"weights\" array");
  std::vector<Complex> z;
  for (const auto& x : doc["weights"]) {
    if (x.is_number()) {
      z.emplace_back(x.get<double>(), 0.0);
    } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
      z.emplace_back(x[0].get<double>(), x[1].get<double>());
    } else {
      throw ParseError("weights must be numbers or [re, im] pairs");
    }
  }
  if (static_cast<int>(z.size()) != n)
    throw ContractError("invalid-input", "need " + std::to_string(n) + " vertex weights, got " +
                                             std::to_string(z.size()));
  return z;
}

ApproxOptions approx_options(const Options& o) {
  ApproxOptions a;
  a.max_degree = o.max_degree;
  a.override_region_check = o.override_region;
  a.radius_margin = o.delta_margin;
  a.tutte_K = o.tutte_K;
  if (o.resource_cap) a.limits.max_connected_sets = *o.resource_cap;
  return a;
}

json result_json(const ApproxResult& r, bool omit_timing) {
  json j;
  j["value"] = to_json(r.value);
  j["log_value"] = to_json(r.log_value);
  j["m"] = r.m;
  j["power_sums"] = to_json(r.power_sums.p);
  j["epsilon"] = r.epsilon;
  j["elapsed_ms"] = omit_timing ? 0.0 : r.elapsed.count();
  j["warnings"] = r.warnings;
  return j;
}

json cmd_approx(const Options& o) {
  const Multigraph g = load_graph(o);
  const ApproxOptions a = approx_options(o);
  const double eps = o.epsilon;
  ApproxResult r;
  if (o.polynomial == "independence") {
    r = approx_independence(g, required_complex(o.lambda, "--lambda"), eps, a);
  } else if (o.polynomial == "independence-even") {
    const Complex l = required_complex(o.lambda, "--lambda");
    if (l.imag() != 0.0) throw ContractError("out-of-range", "even variant needs a real λ");
    r = approx_independence_even(g, l.real(), eps, a);
  } else if (o.polynomial == "independence-multivariate") {
    r = approx_independence_multivariate(g, load_vertex_weights(o, g.num_vertices()), eps, a);
  } else if (o.polynomial == "independence-clawfree") {
    r = approx_independence_clawfree(g, required_complex(o.lambda, "--lambda"), eps, a);
  } else if (o.polynomial == "tutte") {
    r = approx_tutte(g, required_complex(o.q, "--q"), required_complex(o.w, "--w"), eps, a);
  } else if (o.polynomial == "spin") {
    r = approx_spin(g, parse_spin_system(load_model_text(o)), eps, a);
  } else {
    r = approx_edge_coloring(g, parse_edge_coloring_system(load_model_text(o)), eps, a);
  }
  return result_json(r, o.omit_timing);
}

json cmd_exact(const Options& o) {
  using Clock = std::chrono::steady_clock;
  const Multigraph g = load_graph(o);
  const auto start = Clock::now();
  Complex v;
  if (o.polynomial == "independence" || o.polynomial == "independence-clawfree") {
    v = exact_independence(g, required_complex(o.lambda, "--lambda"));
  } else if (o.polynomial == "independence-even") {
    const Complex l = required_complex(o.lambda, "--lambda");
    const ExactPolynomial z = exact_independence_coeffs(g);
    v = 0.5 * (z(l) + z(-l));
  } else if (o.polynomial == "independence-multivariate") {
    v = exact_independence_multivariate(g, load_vertex_weights(o, g.num_vertices()));
  } else if (o.polynomial == "tutte") {
    v = exact_tutte(g, required_complex(o.q, "--q"), required_complex(o.w, "--w"));
  } else if (o.polynomial == "spin") {
    v = exact_spin(g, parse_spin_system(load_model_text(o)));
  } else {
    v = exact_edge_coloring(g, parse_edge_coloring_system(load_model_text(o)));
  }
  const std::chrono::duration<double, std::milli> took = Clock::now() - start;
  json j;
  j["value"] = to_json(v);
  j["log_value"] = to_json(std::log(v));
  j["elapsed_ms"] = o.omit_timing ? 0.0 : took.count();
  return j;
}

PreparedModel prepare(const Options& o, const Multigraph& g) {
  if (o.polynomial == "independence" || o.polynomial == "independence-even" ||
      o.polynomial == "independence-clawfree")
    return prepare_independence(g);
  if (o.polynomial == "independence-multivariate")
    return prepare_independence_multivariate(g, load_vertex_weights(o, g.num_vertices()));
  if (o.polynomial == "tutte") return prepare_tutte(g, required_complex(o.w, "--w"));
  if (o.polynomial == "spin") return prepare_spin(g, parse_spin_system(load_model_text(o)));
  return prepare_edge_coloring(g, parse_edge_coloring_system(load_model_text(o)));
}

/// Brute-force coefficients of the normalized polynomial the engine expands.
std::vector<Complex> oracle_coeffs(const Options& o, const Multigraph& g) {
  if (o.polynomial == "independence-multivariate") {
    throw ContractError("invalid-input", "no coefficient oracle for the multivariate form");
  }
  if (o.polynomial == "tutte") return exact_tutte_inverted_coeffs(g, required_complex(o.w, "--w")).coeffs;
  if (o.polynomial == "spin") return exact_spin_q_coeffs(g, parse_spin_system(load_model_text(o))).coeffs;
  if (o.polynomial == "edge-coloring")
    return exact_edge_q_coeffs(g, parse_edge_coloring_system(load_model_text(o))).coeffs;
  return exact_independence_coeffs(g).coeffs;
}

json cmd_coeffs(const Options& o) {
  const Multigraph g = load_graph(o);
  json j;
  if (o.oracle) {
    std::vector<Complex> c = oracle_coeffs(o, g);
    if (o.m) c.resize(static_cast<std::size_t>(*o.m) + 1, Complex{});
    j["coeffs"] = to_json(c);
    j["m"] = static_cast<int>(c.size()) - 1;
    return j;
  }
  const PreparedModel pm = prepare(o, g);
  const int m = o.m.value_or(pm.degree_bound);
  if (m < 0) throw ContractError("invalid-input", "--m must be nonnegative");
  EngineLimits limits;
  if (o.resource_cap) limits.max_connected_sets = *o.resource_cap;
  j["coeffs"] = to_json(coeffs_from_power_sums(prepared_power_sums(pm, m, limits), m).coeffs);
  j["m"] = m;
  return j;
}

json cmd_power_sums(const Options& o) {
  const Multigraph g = load_graph(o);
  const PreparedModel pm = prepare(o, g);
  const int m = o.m.value_or(pm.degree_bound);
  if (m < 0) throw ContractError("invalid-input", "--m must be nonnegative");
  EngineLimits limits;
  if (o.resource_cap) limits.max_connected_sets = *o.resource_cap;
  json j;
  j["power_sums"] = to_json(prepared_power_sums(pm, m, limits).p);
  j["m"] = m;
  return j;
}

json cmd_enumerate(const Options& o) {
  const Multigraph g = load_graph(o);
  const int k = o.m.value_or(std::min(g.num_vertices(), 4));
  if (k < 0) throw ContractError("invalid-input", "--m must be nonnegative");
  const Flavor flavor = g.has_vertex_colors() ? Flavor::vertex_colored : Flavor::plain;
  const PatternIndex index(g, k, flavor, o.resource_cap.value_or(EngineLimits{}.max_connected_sets));
  json classes = json::array();
  for (const auto& c : index.classes()) {
    json entry;
    entry["order"] = c.representative.size();
    entry["count"] = c.count;
    json edges = json::array();
    const Pattern rep = induced_pattern(g, c.representative);
    for (const auto& e : rep.graph.edges()) edges.push_back(json::array({e.u, e.v}));
    entry["vertices"] = c.representative;
    entry["edges"] = edges;
    classes.push_back(entry);
  }
  json per_vertex = json::array();
  std::vector<std::vector<std::int64_t>> counts(g.num_vertices(), std::vector<std::int64_t>(k + 1, 0));
  for (const auto& s : index.sets()) {
    for (int v : s) ++counts[v][s.size()];
  }
  for (const auto& row : counts) per_vertex.push_back(json(std::vector<std::int64_t>(row.begin() + 1, row.end())));
  json j;
  j["k"] = k;
  j["flavor"] = to_string(flavor);
  j["num_sets"] = index.sets().size();
  j["classes"] = classes;
  j["per_vertex_counts"] = per_vertex;
  j["bound"] = json::array();
  for (int i = 1; i <= k; ++i) j["bound"].push_back(count_connected_bound(max_degree(g), i));
  return j;
}

json cmd_bench(const Options& o) {
  if (o.polynomial != "independence")
    throw ContractError("invalid-input", "bench supports the independence polynomial only");
  BenchConfig c;
  c.sizes = o.sizes;
  c.max_degree = o.max_degree.value_or(3);
  c.avg_degree = o.avg_degree;
  c.lambda = o.lambda ? parse_complex(*o.lambda) : Complex{0.1};
  c.epsilon = o.epsilon;
  c.seed = o.seed;
  c.omit_timing = o.omit_timing;
  c.resource_cap = o.resource_cap;
  return run_bench(c);
}

void add_common(CLI::App& sub, Options& o) {
  sub.add_option("-p,--polynomial,polynomial", o.polynomial, "Polynomial family")
      ->check(CLI::IsMember(kPolynomials));
  sub.add_option("--graph", o.graph_path, "Graph file");
  sub.add_option("--model", o.model_path, "Model parameter file (JSON)");
  sub.add_option("--lambda", o.lambda, "Evaluation point \"re\" or \"re,im\"");
  sub.add_option("--q", o.q, "Tutte q");
  sub.add_option("--w", o.w, "Tutte w");
  sub.add_option("--epsilon", o.epsilon, "Target multiplicative error")->check(CLI::PositiveNumber);
  sub.add_option("--m", o.m, "Order (coeffs, power-sums) or pattern size (enumerate)");
  sub.add_option("--delta-margin,--radius-margin", o.delta_margin,
                 "Zero-free margin for spin and edge-coloring")
      ->check(CLI::PositiveNumber);
  sub.add_option("--tutte-K", o.tutte_K, "Zero-free constant K for the Tutte disk");
  sub.add_flag("--override-region-check", o.override_region,
               "Warn instead of failing outside the proven region");
  sub.add_option("--resource-cap", o.resource_cap, "Maximum number of connected sets");
  sub.add_option("--max-degree", o.max_degree, "Declared degree bound");
  sub.add_option("--seed", o.seed, "Random seed (bench)");
  sub.add_option("--sizes", o.sizes, "Graph sizes (bench)")->delimiter(',');
  sub.add_option("--avg-degree", o.avg_degree, "Target average degree (bench)");
  sub.add_flag("--omit-timing", o.omit_timing, "Report elapsed times as 0");
  sub.add_flag("--oracle", o.oracle, "Brute-force coefficients (coeffs)");
}

int fail(std::ostream& err, int code, const std::string& message) {
  err << "error: " << message << '\n';
  return code;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

json to_json(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json to_json(const std::vector<Complex>& zs) {
  json out = json::array();
  for (auto z : zs) out.push_back(to_json(z));
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate graph polynomials by truncated Taylor expansion of the logarithm"};
  app.name("bigcp");
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"approx", "Multiplicative approximation of a polynomial value"},
      {"exact", "Brute-force value"},
      {"coeffs", "Coefficient prefix of the normalized polynomial"},
      {"power-sums", "Inverse power sums p_1..p_m"},
      {"enumerate", "Connected induced subgraph dictionary"},
      {"bench", "Timing sweep over random bounded-degree graphs"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(*sub, o);
    sub->callback([&o, name = name] { o.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink_out, sink_err;
    const int code = app.exit(e, sink_out, sink_err);
    out << sink_out.str();
    err << sink_err.str();
    return code == 0 ? 0 : 1;
  }

  if (o.polynomial.empty()) o.polynomial = "independence";
  try {
    json result;
    if (o.command == "approx") result = cmd_approx(o);
    else if (o.command == "exact") result = cmd_exact(o);
    else if (o.command == "coeffs") result = cmd_coeffs(o);
    else if (o.command == "power-sums") result = cmd_power_sums(o);
    else if (o.command == "enumerate") result = cmd_enumerate(o);
    else result = cmd_bench(o);
    out << result.dump(2) << '\n';
    return 0;
  } catch (const ParseError& e) {
    return fail(err, 1, e.what());
  } catch (const ContractError& e) {
    return fail(err, 2, e.what());
  } catch (const ResourceError& e) {
    return fail(err, 3, e.what());
  } catch (const json::exception& e) {
    return fail(err, 1, e.what());
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace bigcp
