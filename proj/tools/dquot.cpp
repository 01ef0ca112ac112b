// Command-line front end. Exit codes: 0 ok, 2 input error, 3 computation error,
// 4 cross-check disagreement.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "dquot/bar.hpp"
#include "dquot/cohomology.hpp"
#include "dquot/crosscheck.hpp"
#include "dquot/error.hpp"
#include "dquot/expr.hpp"
#include "dquot/hochschild.hpp"
#include "dquot/io.hpp"
#include "dquot/matfac.hpp"
#include "dquot/periodicity.hpp"
#include "dquot/quiver.hpp"
#include "dquot/singlocal.hpp"

using namespace dquot;
using io::json;

namespace {

constexpr int kExitInput = 2, kExitComputation = 3, kExitDisagree = 4;

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream ss;
  ss << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

struct Window {
  int lo, hi;
};

Window parse_window(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("window must look like a..b, got '" + text + "'");
  try {
    std::size_t u1 = 0, u2 = 0;
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    Window w{std::stoi(a, &u1), std::stoi(b, &u2)};
    if (u1 != a.size() || u2 != b.size() || w.lo > w.hi) throw std::invalid_argument("");
    return w;
  } catch (const std::logic_error&) {
    throw ParseError("window must look like a..b with a <= b, got '" + text + "'");
  }
}

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument("");
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw ParseError(std::string(what) + ": expected comma-separated non-negative integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError(std::string(what) + " is empty");
  return out;
}

// Shared state for one invocation.
struct Run {
  std::vector<std::string> argv;
  std::string field_text = "Q";
  std::string json_path;
  bool timing = false;
  std::size_t degree_bound = 0;
  std::string digest_input;
  json results = json::object();
  std::vector<std::string> warnings;

  Field field() const { return io::parse_field(field_text); }

  void warn(const std::string& w) {
    warnings.push_back(w);
    std::cout << "warning: " << w << "\n";
  }

  void emit(double seconds) const {
    if (json_path.empty()) return;
    json report{{"command", argv}, {"input_digest", fnv1a(digest_input)}, {"results", results}, {"warnings", warnings}};
    if (timing) report["wall_time_s"] = seconds;
    std::string text = report.dump(2) + "\n";
    if (json_path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(json_path);
    if (!out) throw InputError("cannot write '" + json_path + "'");
    out << text;
  }
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string vec_string(const Vec& v) {
  std::vector<std::string> parts;
  for (auto& x : v) parts.push_back(to_string(x));
  return "(" + join(parts, ", ") + ")";
}

json vec_json(const Vec& v) {
  json out = json::array();
  for (auto& x : v) out.push_back(to_string(x));
  return out;
}

std::set<std::size_t> parse_vertices(const std::string& text, std::size_t count) {
  std::set<std::size_t> out;
  for (auto v : parse_list(text, "--vertices")) {
    if (v < 1 || v > count) throw InputError("vertex " + std::to_string(v) + " is out of range 1.." + std::to_string(count));
    out.insert(v - 1);
  }
  return out;
}

void print_h0(const FinDimAlgebra& h0, json& out) {
  std::cout << "H^0 algebra: dim " << h0.dim() << ", basis {" << join(h0.labels(), ", ") << "}\n";
  for (std::size_t i = 0; i < h0.dim(); ++i)
    for (std::size_t j = 0; j < h0.dim(); ++j) {
      const auto& p = h0.product(i, j);
      if (p.empty()) continue;
      std::string rhs;
      for (auto& [k, c] : p) {
        std::string coeff = to_string(c);
        rhs += (rhs.empty() ? "" : " + ") + (coeff == "1" ? "" : coeff + "*") + h0.labels()[k];
      }
      std::cout << "  " << h0.labels()[i] << " * " << h0.labels()[j] << " = " << rhs << "\n";
    }
  out = io::algebra_to_json(h0);
}

// ---------------------------------------------------------------------------

struct CohomologyArgs {
  std::string file;
  std::string vertices, idempotent;
  std::string window = "-2..0";
  std::size_t depth = 0;
  bool eta = false, assume_local = false, hh0 = false, normalized = false;
  std::string hh0_schedule = "1,2";
  std::string export_complex;
};

int cmd_dq_cohomology(Run& run, const CohomologyArgs& args) {
  const std::string text = io::read_file(args.file);
  run.digest_input = text;
  json input = io::parse_json(text, args.file);
  Field f = run.field();

  std::optional<FinDimAlgebra> algebra;
  std::optional<Idempotent> e;
  if (input.is_object() && input.contains("vertices")) {
    auto p = io::quiver_from_json(input);
    p.field = f;
    if (run.degree_bound) p.degree_bound = run.degree_bound;
    auto a = build_algebra(p);
    algebra = a.algebra;
    if (!args.vertices.empty())
      e = vertex_idempotent(a, parse_vertices(args.vertices, p.quiver.vertex_count()));
    else if (!args.idempotent.empty())
      e = Idempotent(a.algebra, a.element(args.idempotent));
    else
      throw InputError("give the idempotent with --vertices or --idempotent");
    run.results["path_basis"] = a.path_labels;
  } else {
    algebra = io::algebra_from_json(input, f);
    if (args.idempotent.empty()) throw InputError("give the idempotent coordinates with --idempotent c1,c2,...");
    Vec coords;
    std::stringstream ss(args.idempotent);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(f.normalize(parse_rational(item)));
    if (coords.size() != algebra->dim()) throw InputError("--idempotent needs " + std::to_string(algebra->dim()) + " coordinates");
    e = Idempotent(*algebra, coords);
  }

  Window w = parse_window(args.window);
  if (w.hi > 0) throw InputError("the derived quotient is connective; use a window ending at or below 0");
  const std::size_t D = static_cast<std::size_t>(-w.lo);
  const std::size_t depth = args.depth ? args.depth : D + 2;
  BarOptions bo;
  bo.normalized = args.normalized;
  auto bar = build_bar(*algebra, *e, depth, bo);
  auto h = cohomology(bar, D);

  std::cout << "dim A = " << algebra->dim() << ", dim eAe = " << bar.corner().algebra.dim() << ", dim Ae = " << bar.ae().dim()
            << ", dim eA = " << bar.ea().dim() << "\n";
  std::cout << "degree   dim H^j\n";
  json dims = json::array();
  for (int j = w.hi; j >= w.lo; --j) {
    std::cout << std::setw(6) << j << "   " << h.report.dim(j) << "\n";
    dims.push_back(json{{"degree", j}, {"dim", h.report.dim(j)}, {"basis", h.report.basis_labels[static_cast<std::size_t>(-j)]}});
  }
  run.results["algebra_dim"] = algebra->dim();
  run.results["corner_dim"] = bar.corner().algebra.dim();
  run.results["cohomology"] = dims;
  json h0;
  print_h0(h.h0_algebra, h0);
  run.results["h0_algebra"] = h0;
  run.results["h0_matches_quotient"] = h.h0_matches_quotient;
  if (!h.h0_matches_quotient) run.warn("H^0 differs from A/AeA (unexpected)");

  if (args.eta) {
    json status;
    try {
      auto eta = find_eta(h.report, args.assume_local ? std::optional<bool>(true) : std::nullopt);
      std::cout << "eta: found, coordinates " << vec_string(eta.coordinates) << " in H^-2, verified on [" << eta.verified_lo - 2
                << ", 0]\n";
      status = {{"found", true}, {"coordinates", vec_json(eta.coordinates)}, {"ranks", eta.ranks}};
    } catch (const ComputationError& ex) {
      std::cout << "eta: not found (" << ex.what() << ")\n";
      status = {{"found", false}, {"reason", ex.what()}};
    }
    run.results["eta"] = status;
  }
  if (args.hh0) {
    auto schedule = parse_list(args.hh0_schedule, "--hh0-schedule");
    auto r = hh0_experimental(bar, schedule);
    json values = json::array();
    std::cout << "HH^0 (experimental):";
    for (auto [n, v] : r.values) {
      std::cout << " depth " << n << ": " << v << ";";
      values.push_back(json{{"depth", n}, {"dim", v}});
    }
    std::cout << (r.stabilized ? " stabilized" : " not stabilized") << "\n";
    run.results["hh0"] = {{"values", values}, {"stabilized", r.stabilized}, {"experimental", true}};
    run.warn("HH^0 is experimental: truncated values are reported without a convergence guarantee");
    if (!r.stabilized) run.warn("HH^0 did not stabilize over the depth schedule");
  }
  if (!args.export_complex.empty()) {
    std::ofstream out(args.export_complex);
    if (!out) throw InputError("cannot write '" + args.export_complex + "'");
    out << io::complex_to_json(bar).dump() << "\n";
  }
  return 0;
}

int cmd_contraction(Run& run, const std::string& file, const std::string& vertices) {
  const std::string text = io::read_file(file);
  run.digest_input = text;
  auto p = io::quiver_from_json(io::parse_json(text, file));
  p.field = run.field();
  if (run.degree_bound) p.degree_bound = run.degree_bound;
  if (vertices.empty()) throw InputError("give the vertices to kill with --vertices");
  const auto kill = parse_vertices(vertices, p.quiver.vertex_count());
  auto con = contraction_algebra(p, kill);
  const auto& A = con.algebra;
  // vertex idempotents of the reduced quiver, named by their original vertex
  std::vector<std::string> survivors;
  for (std::size_t v = 0; v < p.quiver.vertex_count(); ++v)
    if (!kill.count(v)) survivors.push_back("e" + std::to_string(v + 1));
  std::vector<std::string> labels = con.path_labels;
  for (auto& l : labels)
    for (std::size_t i = 0; i < survivors.size(); ++i)
      if (l == "e" + std::to_string(i + 1)) {
        l = survivors[i];
        break;
      }
  std::cout << "contraction algebra: dim " << A.dim() << "\n";
  std::cout << "basis: " << join(labels, ", ") << "\n";
  json gens = json::array();
  for (const auto& arrow : con.quiver.arrows()) {
    if (con.identified_arrows.count(arrow.name)) continue;
    Vec g = con.element(arrow.name);
    if (std::all_of(g.begin(), g.end(), [](const Scalar& s) { return is_zero(s); })) continue;
    // nilpotency degree: least k with g^k = 0
    Vec power = g;
    std::optional<std::size_t> degree;
    for (std::size_t k = 1; k <= A.dim() + 1; ++k) {
      if (std::all_of(power.begin(), power.end(), [](const Scalar& s) { return is_zero(s); })) {
        degree = k;
        break;
      }
      power = A.multiply(power, g);
    }
    std::cout << "generator " << arrow.name << ": "
              << (degree ? "nilpotent, " + arrow.name + "^" + std::to_string(*degree) + " = 0" : std::string("not nilpotent")) << "\n";
    json entry{{"name", arrow.name}};
    entry["nilpotency_degree"] = degree ? json(*degree) : json(nullptr);
    gens.push_back(entry);
  }
  run.results["dim"] = A.dim();
  run.results["basis"] = labels;
  run.results["generators"] = gens;
  json alg = io::algebra_to_json(A);
  alg["basis"] = labels;
  run.results["algebra"] = alg;
  return 0;
}

int cmd_stable_ext(Run& run, const std::string& file, const std::string& window, const std::string& schedule_text) {
  const std::string text = io::read_file(file);
  run.digest_input = text;
  auto in = io::mf_from_json(io::parse_json(text, file), run.field());
  const auto& target = in.target ? *in.target : in.source;
  Window w = parse_window(window);
  Schedule schedule = schedule_text.empty() ? default_truncation_schedule() : parse_list(schedule_text, "--schedule");
  auto rep = stable_ext(in.source, target, in.sigma, w.lo, w.hi, schedule);
  std::cout << "sigma = " << in.sigma.sigma.to_string(in.sigma.variables) << "\n";
  std::cout << "degree   dim stable-Ext^j\n";
  json dims = json::array();
  for (int j = w.hi; j >= w.lo; --j) {
    std::cout << std::setw(6) << j << "   " << rep.dim(j) << "\n";
    dims.push_back(json{{"degree", j}, {"dim", rep.dim(j)}});
  }
  std::cout << "periodic: " << (rep.periodic ? "yes" : "no") << ", stabilized at truncation order " << rep.truncation_order << "\n";
  json history = json::array();
  for (auto& h : rep.history) history.push_back(json{{"order", h[0]}, {"even", h[1]}, {"odd", h[2]}});
  run.results = {{"stable_ext", dims}, {"periodic", rep.periodic}, {"stabilized", rep.stabilized},
                 {"truncation_order", rep.truncation_order}, {"history", history}};
  return 0;
}

std::vector<std::string> symbols_of(const expr::Node& n) {
  std::set<std::string> names;
  std::function<void(const expr::Node&)> walk = [&](const expr::Node& x) {
    if (x.kind == expr::Node::Kind::Symbol) names.insert(x.symbol);
    for (const auto& c : x.children) walk(c);
  };
  walk(n);
  return {names.begin(), names.end()};
}

int cmd_sing(Run& run, const std::string& potential, const std::string& variables, const std::string& schedule_text) {
  run.digest_input = potential + "\n" + variables;
  std::vector<std::string> vars;
  if (variables.empty()) {
    vars = symbols_of(expr::parse(potential));
    if (vars.empty()) vars = {"x"};
  } else {
    std::stringstream ss(variables);
    std::string v;
    while (std::getline(ss, v, ',')) vars.push_back(v);
  }
  Schedule schedule = schedule_text.empty() ? default_singularity_schedule() : parse_list(schedule_text, "--schedule");
  Potential p = Potential::parse(vars, potential, run.field());
  auto mu = milnor_probe(p, schedule), tau = tjurina_probe(p, schedule);
  auto probe_json = [](const LocalQuotientProbe& probe) {
    json dims = json::array();
    for (auto [n, d] : probe.dims_at_order) dims.push_back(json{{"order", n}, {"dim", d}});
    return json{{"finite", probe.finite}, {"value", probe.finite ? json(probe.value) : json(nullptr)}, {"dims_at_order", dims}};
  };
  std::cout << "sigma = " << p.sigma.to_string(vars) << " in variables " << join(vars, ", ") << "\n";
  const bool isolated = mu.finite;
  if (isolated) {
    std::cout << "Milnor number mu = " << mu.value << "\n";
    std::cout << "Tjurina number tau = " << (tau.finite ? std::to_string(tau.value) : std::string("not stabilized")) << "\n";
  } else {
    std::cout << "Milnor algebra did not stabilize: not an isolated singularity along this schedule\n";
  }
  run.results = {{"variables", vars}, {"milnor", probe_json(mu)}, {"tjurina", probe_json(tau)}, {"isolated", isolated}};
  if (isolated && tau.finite) {
    bool consistent = mu.value == tau.value;
    std::cout << "mu = tau: " << (consistent ? "yes" : "no") << "\n";
    run.results["quasi_homogeneous_consistent"] = consistent;
  } else {
    run.warn("the singularity is not isolated along the schedule " + join([&] {
      std::vector<std::string> s;
      for (auto n : schedule) s.push_back(std::to_string(n));
      return s;
    }(), ","));
  }
  return 0;
}

int cmd_crosscheck(Run& run, std::size_t n, std::size_t m, const std::string& window) {
  run.digest_input = std::to_string(n) + "," + std::to_string(m) + "," + window;
  Window w = parse_window(window);
  if (w.hi != 0) throw InputError("crosscheck windows end at degree 0");
  if (n < 1 || m < 1 || m > n || n > 8) throw InputError("crosscheck needs 1 <= m <= n <= 8");
  auto rep = comparison_check(n, m, static_cast<std::size_t>(-w.lo), run.field());
  std::cout << "R = k[x]/x^" << n << ", M = k[x]/x^" << m << "\n";
  std::cout << "degree   bar   mf\n";
  json rows = json::array();
  for (const auto& r : rep.rows) {
    std::cout << std::setw(6) << r.degree << "   " << std::setw(3) << r.bar_dim << "   " << std::setw(3) << r.mf_dim
              << (r.agree() ? "" : "   MISMATCH") << "\n";
    rows.push_back(json{{"degree", r.degree}, {"bar", r.bar_dim}, {"mf", r.mf_dim}, {"agree", r.agree()}});
  }
  std::cout << "verdict: " << (rep.agree() ? "agree" : "DISAGREE") << "\n";
  run.results = {{"n", n}, {"m", m}, {"rows", rows}, {"agree", rep.agree()}, {"h0_matches_quotient", rep.h0_matches_quotient}};
  return rep.agree() ? 0 : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  Run run;
  run.argv.assign(argv, argv + argc);
  CLI::App app{"Derived quotients, contraction algebras, matrix factorizations and singularity invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", run.field_text, "Q or Fp:<prime>");
  app.add_option("--json", run.json_path, "write a JSON report to this path (- for stdout)");
  app.add_flag("--timing", run.timing, "include wall time in the JSON report");
  app.add_option("--degree-bound", run.degree_bound, "path length bound for quiver inputs");

  CohomologyArgs ca;
  auto* dq = app.add_subcommand("dq-cohomology", "cohomology of the derived quotient A/^L AeA");
  dq->add_option("file", ca.file, "algebra or quiver JSON file")->required();
  dq->add_option("--vertices", ca.vertices, "quiver vertices of e, 1-based, comma-separated");
  dq->add_option("--idempotent", ca.idempotent, "e as a path expression (quiver) or coordinates (algebra)");
  dq->add_option("--window", ca.window, "degree window a..0");
  dq->add_option("--depth", ca.depth, "bar truncation depth (default: window depth + 2)");
  dq->add_flag("--eta", ca.eta, "search for the periodicity element (window must reach -6)");
  dq->add_flag("--assume-local", ca.assume_local, "treat H^0 as local without testing (prime fields)");
  dq->add_flag("--normalized", ca.normalized, "use R/ke in the middle tensor factors");
  dq->add_flag("--hh0", ca.hh0, "experimental HH^0(A, A/^L AeA)");
  dq->add_option("--hh0-schedule", ca.hh0_schedule, "depths for --hh0");
  dq->add_option("--export-complex", ca.export_complex, "write the truncated complex as JSON");

  std::string con_file, con_vertices;
  auto* con = app.add_subcommand("contraction", "contraction algebra A/AeA from a quiver presentation");
  con->add_option("file", con_file, "quiver JSON file")->required();
  con->add_option("--vertices", con_vertices, "vertices to kill, 1-based, comma-separated")->required();

  std::string mf_file, mf_window = "-4..4", schedule;
  auto* se = app.add_subcommand("stable-ext", "stable Ext between matrix factorizations");
  se->add_option("file", mf_file, "matrix factorization JSON file")->required();
  se->add_option("--window", mf_window, "degree window a..b");
  se->add_option("--schedule", schedule, "truncation orders, comma-separated");

  std::string potential, variables;
  auto* sg = app.add_subcommand("sing", "Milnor and Tjurina numbers of a hypersurface germ");
  sg->add_option("potential", potential, "polynomial, e.g. x^3+y^3")->required();
  sg->add_option("--variables", variables, "comma-separated variable names (default: the symbols, sorted)");
  sg->add_option("--schedule", schedule, "truncation orders, comma-separated");

  std::size_t cn = 0, cm = 0;
  std::string cwindow = "-4..0";
  auto* cc = app.add_subcommand("crosscheck", "compare bar and matrix factorization pipelines on k[x]/x^n");
  cc->add_option("--n", cn, "R = k[x]/x^n")->required();
  cc->add_option("--m", cm, "M = k[x]/x^m")->required();
  cc->add_option("--window", cwindow, "degree window a..0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    int code = 0;
    if (*dq)
      code = cmd_dq_cohomology(run, ca);
    else if (*con)
      code = cmd_contraction(run, con_file, con_vertices);
    else if (*se)
      code = cmd_stable_ext(run, mf_file, mf_window, schedule);
    else if (*sg)
      code = cmd_sing(run, potential, variables, schedule);
    else if (*cc)
      code = cmd_crosscheck(run, cn, cm, cwindow);
    run.emit(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return code;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}
