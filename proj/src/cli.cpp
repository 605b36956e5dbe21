#include "mlc/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "mlc/charpoly.hpp"
#include "mlc/error.hpp"
#include "mlc/graph.hpp"
#include "mlc/io.hpp"
#include "mlc/lorentz.hpp"

namespace mlc {

namespace {

constexpr int kPass = 0;
constexpr int kError = 1;
constexpr int kFail = 2;

struct Input {
  std::string path;
  std::string format = "flats";
  std::vector<int> uniform;
  std::vector<int> chain;
  std::vector<int> powers;
  int directions = 0;
};

struct Loaded {
  Matroid matroid;
  std::optional<Graph> graph;
};

Loaded load(const Input& in, const Config& cfg) {
  if (in.uniform.size() == 2) return {uniform(in.uniform[0], in.uniform[1]), std::nullopt};
  if (in.path.empty()) throw Error(ErrorCode::kInvalidParameters, "an input file or --uniform R N is required");
  const std::string text = read_file(in.path);
  if (in.format == "flats") return {parse_matroid(text), std::nullopt};
  if (in.format == "graph") {
    Graph g = parse_edge_list(text);
    return {graphic_matroid(g, cfg.max_flats), g};
  }
  if (in.format == "ffmatrix") return {arrangement_matroid(parse_arrangement(text)), std::nullopt};
  throw Error(ErrorCode::kInvalidParameters, "unknown format " + in.format);
}

void require_set_function_size(const Matroid& m, const Config& cfg) {
  if (m.ground_size() > cfg.max_ground) {
    throw Error(ErrorCode::kSizeCapExceeded, "ground set larger than " + std::to_string(cfg.max_ground));
  }
}

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::string joined(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s;
}

std::vector<std::string> flat_names(const Matroid& m) {
  std::vector<std::string> names;
  for (int p = 0; p < m.proper_count(); ++p) names.push_back("t" + std::to_string(m.proper_flat_id(p)));
  return names;
}

std::vector<AmplePoint> sampled_directions(const Matroid& m, std::uint64_t seed, int count) {
  std::vector<AmplePoint> dirs;
  for (int i = 0; i < count; ++i) dirs.push_back(sample_ample(m, seed + 1 + i));
  return dirs;
}

int cmd_check(const Loaded& l, const Config& cfg, std::ostream& out) {
  const Matroid& m = l.matroid;
  if (cfg.json) {
    Json j = matroid_to_json(m);
    j["rank"] = m.rank();
    j["hash"] = m.flat_count() ? std::to_string(matroid_hash(m)) : "0";
    out << j.dump(2) << "\n";
    return kPass;
  }
  out << "valid lattice of flats\n";
  out << "ground " << m.ground_size() << ", flats " << m.flat_count() << ", rank " << m.rank() << "\n";
  for (int id = 0; id < m.flat_count(); ++id) {
    out << id << ": {";
    const auto elems = members(m.flat(id));
    for (std::size_t i = 0; i < elems.size(); ++i) out << (i ? "," : "") << elems[i];
    out << "} rank " << m.rank(id) << "\n";
  }
  return kPass;
}

int cmd_charpoly(const Loaded& l, const Config& cfg, std::ostream& out) {
  const Matroid& m = l.matroid;
  const CharPoly chi = characteristic_polynomial(m);
  std::optional<ReducedCharPoly> red;
  if (m.is_loopless() && m.rank() >= 1) red = reduced_characteristic_polynomial(m);
  if (cfg.json) {
    Json j{{"chi", chi.poly.to_string()}, {"mu", integers(chi.mu)}};
    if (red) {
      j["reduced"] = red->poly.to_string();
      j["mu_reduced"] = integers(red->mu);
    }
    out << j.dump(2) << "\n";
    return kPass;
  }
  out << "chi(q) = " << chi.poly.to_string() << "\n";
  out << "mu: " << joined(chi.mu) << "\n";
  if (red) {
    out << "reduced(q) = " << red->poly.to_string() << "\n";
    out << "mu reduced: " << joined(red->mu) << "\n";
  }
  return kPass;
}

int cmd_chromatic(const Loaded& l, const Config& cfg, std::ostream& out) {
  if (!l.graph) throw Error(ErrorCode::kInvalidParameters, "chromatic needs --format graph");
  const Graph& g = *l.graph;
  const UniPoly p = chromatic_polynomial(g);
  const bool relation = chromatic_relation_check(g);
  const std::vector<Integer> mags = p.is_zero() ? std::vector<Integer>{} : signed_magnitudes(p);
  if (cfg.json) {
    out << Json{{"chromatic", p.to_string()}, {"coefficients", integers(mags)}, {"components", component_count(g)},
                {"matches_matroid", relation}}
               .dump(2)
        << "\n";
  } else {
    out << "P(q) = " << p.to_string() << "\n";
    out << "coefficients: " << joined(mags) << "\n";
    out << "q^kappa chi_M(q): " << (relation ? "matches" : "MISMATCH") << "\n";
  }
  return relation ? kPass : kFail;
}

int cmd_volume(const Loaded& l, const Config& cfg, std::ostream& out) {
  const Matroid& m = l.matroid;
  const MultiPoly v = volume_polynomial(m);
  if (cfg.json) {
    Json vars = Json::array();
    for (int p = 0; p < m.proper_count(); ++p) vars.push_back(m.proper_flat_id(p));
    out << Json{{"variables", vars}, {"terms", polynomial_to_json(v)}}.dump(2) << "\n";
  } else {
    out << "V = " << v.to_string(flat_names(m)) << "\n";
  }
  return kPass;
}

int cmd_mixed(const Loaded& l, const Config& cfg, std::ostream& out) {
  const Matroid& m = l.matroid;
  const MultiPoly v = volume_polynomial(m);
  const int e = default_element(m);
  Json values = Json::array();
  for (int k = 0; k < m.rank(); ++k) {
    const Rational d = mixed_degree(m, v, k, e);
    if (cfg.json) {
      values.push_back(to_string(d));
    } else {
      out << "k=" << k << ": " << to_string(d) << "\n";
    }
  }
  if (cfg.json) out << Json{{"mixed", values}}.dump(2) << "\n";
  return kPass;
}

int emit(const Certificate& c, const Config& cfg, std::ostream& out) {
  out << (cfg.json ? certificate_to_json(c).dump(2) + "\n" : certificate_to_text(c));
  return c.pass ? kPass : kFail;
}

int cmd_certify(const Loaded& l, const Input& in, const Config& cfg, std::ostream& out) {
  const Matroid& m = l.matroid;
  require_set_function_size(m, cfg);
  const AmplePoint u = sample_ample(m, cfg.seed);
  return emit(certify_lorentzian(m, u, sampled_directions(m, cfg.seed, in.directions)), cfg, out);
}

int cmd_certify_chain(const Loaded& l, const Input& in, const Config& cfg, std::ostream& out) {
  const Matroid& m = l.matroid;
  require_set_function_size(m, cfg);
  const RationalVector u = sample_chain_point(m, in.chain, cfg.seed);
  std::vector<RationalVector> dirs;
  for (int i = 0; i < in.directions; ++i) dirs.push_back(sample_chain_point(m, in.chain, cfg.seed + 1 + i));
  return emit(certify_chain(m, in.chain, u, dirs), cfg, out);
}

int cmd_hodge(const Loaded& l, const Config& cfg, std::ostream& out) {
  const Matroid& m = l.matroid;
  require_set_function_size(m, cfg);
  if (m.rank() < 3) throw Error(ErrorCode::kRankTooSmall, "hodge needs rank >= 3");
  const MultiPoly v = volume_polynomial(m);
  const std::vector<AmplePoint> dirs = sampled_directions(m, cfg.seed + 100, m.rank() - 3);
  struct Case {
    std::string label;
    ClassVector x;
    ClassVector y;
  };
  std::vector<Case> cases{{"sampled", sample_ample(m, cfg.seed).coords, sample_ample(m, cfg.seed + 1).coords}};
  const int e = default_element(m);
  for (const auto& eps : cfg.eps) {
    cases.push_back({"alpha/beta eps=" + to_string(eps), approach_alpha(m, e, eps).coords, approach_beta(m, e, eps).coords});
  }
  bool all = true;
  Json results = Json::array();
  for (const auto& c : cases) {
    const HodgeResult h = hodge_2x2(m, v, c.x, c.y, dirs);
    all = all && h.holds;
    if (cfg.json) {
      results.push_back(Json{{"case", c.label},
                             {"matrix",
                              {{to_string(h.matrix(0, 0)), to_string(h.matrix(0, 1))},
                               {to_string(h.matrix(1, 0)), to_string(h.matrix(1, 1))}}},
                             {"determinant", to_string(h.determinant)},
                             {"holds", h.holds}});
    } else {
      out << c.label << ": [[" << to_string(h.matrix(0, 0)) << ", " << to_string(h.matrix(0, 1)) << "], ["
          << to_string(h.matrix(1, 0)) << ", " << to_string(h.matrix(1, 1)) << "]] det " << to_string(h.determinant)
          << (h.holds ? " PASS" : " FAIL") << "\n";
    }
  }
  if (cfg.json) out << Json{{"cases", results}, {"pass", all}}.dump(2) << "\n";
  return all ? kPass : kFail;
}

int cmd_rhw(const Loaded& l, const Config& cfg, std::ostream& out) {
  const RhwReport r = verify_rhw(l.matroid);
  Json mixed = Json::array();
  for (const auto& x : r.mixed) mixed.push_back(to_string(x));
  if (cfg.json) {
    out << Json{{"mu", integers(r.mu)},
                {"mu_reduced", integers(r.mu_reduced)},
                {"mixed", mixed},
                {"mu_log_concave", r.mu_log_concave},
                {"reduced_log_concave", r.reduced_log_concave},
                {"mixed_matches", r.mixed_matches},
                {"sum_matches", r.sum_matches},
                {"pass", r.pass}}
               .dump(2)
        << "\n";
  } else {
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "mu: " << joined(r.mu) << "\n";
    out << "mu reduced: " << joined(r.mu_reduced) << "\n";
    out << "mixed degrees:";
    for (const auto& x : r.mixed) out << " " << to_string(x);
    out << "\n";
    out << "log-concave: " << yes(r.mu_log_concave) << ", reduced log-concave: " << yes(r.reduced_log_concave) << "\n";
    out << "mixed degrees match: " << yes(r.mixed_matches) << ", direct sum check: " << yes(r.sum_matches) << "\n";
    out << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return r.pass ? kPass : kFail;
}

int cmd_ffcount(const Input& in, const Config& cfg, std::ostream& out) {
  if (in.path.empty()) throw Error(ErrorCode::kInvalidParameters, "ffcount needs an arrangement file");
  const Arrangement a = parse_arrangement(read_file(in.path));
  const std::vector<int> powers = in.powers.empty() ? std::vector<int>{1, 2} : in.powers;
  bool all = true;
  Json rows = Json::array();
  for (int b : powers) {
    const FiniteFieldCount r = finite_field_count(a, b);
    const bool ok = r.count == r.expected;
    all = all && ok;
    if (cfg.json) {
      rows.push_back(Json{{"b", b}, {"kappa", r.kappa}, {"count", r.count.get_str()}, {"expected", r.expected.get_str()}, {"match", ok}});
    } else {
      out << "b=" << b << ": count " << r.count.get_str() << ", p^(b kappa) chi(p^b) = " << r.expected.get_str()
          << (ok ? " PASS" : " FAIL") << "\n";
    }
  }
  if (cfg.json) out << Json{{"p", a.p}, {"counts", rows}, {"pass", all}}.dump(2) << "\n";
  return all ? kPass : kFail;
}

int cmd_pf(const Input& in, const Config& cfg, std::ostream& out) {
  if (in.path.empty()) throw Error(ErrorCode::kInvalidParameters, "pf needs a matrix file");
  const SymMatrix a = parse_matrix(read_file(in.path));
  const PerronResult r = perron(a);
  const bool positive = std::all_of(r.vector.begin(), r.vector.end(), [](double x) { return x > 0; });
  const bool pass = r.simple && positive;
  std::ostringstream lam;
  lam.precision(15);
  lam << r.lambda;
  if (cfg.json) {
    out << Json{{"lambda", r.lambda},
                {"vector", r.vector},
                {"iterations", r.iterations},
                {"simple", r.simple},
                {"bracket", {to_string(r.exact.lo), to_string(r.exact.hi)}},
                {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    out << "lambda_max ~ " << lam.str() << " after " << r.iterations << " iterations\n";
    out << "exact root in (" << r.exact.lo.get_d() << ", " << r.exact.hi.get_d() << "]\n";
    out << "simple: " << (r.simple ? "yes" : "no") << ", positive vector: " << (positive ? "yes" : "no") << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  Input in;
  std::vector<std::string> eps_text;

  CLI::App app{"Exact matroid invariants and Lorentzian certificates", "mlc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", in.format, "input format: flats, graph or ffmatrix")
      ->check(CLI::IsMember({"flats", "graph", "ffmatrix"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled ample points")->capture_default_str();
  app.add_option("--eps", eps_text, "p/q offsets for alpha/beta approaches (repeatable)");
  app.add_option("--max-flats", cfg.max_flats, "cap on enumerated graph flats")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-ground", cfg.max_ground, "cap on set-function ground sets")->capture_default_str()->check(CLI::Range(1, 20));
  app.add_flag("--json", cfg.json, "structured output");
  app.add_option("--uniform", in.uniform, "use U_{R,N} instead of an input file")->expected(2);

  struct Sub {
    const char* name;
    const char* help;
  };
  const std::vector<Sub> subs{{"check", "validate a lattice of flats"},
                              {"charpoly", "characteristic and reduced characteristic polynomials"},
                              {"chromatic", "chromatic polynomial of a graph"},
                              {"volume", "volume polynomial in the delta basis"},
                              {"mixed", "D_alpha^{r-k} D_beta^k V for all k"},
                              {"certify", "Hessian signature at a seeded ample point"},
                              {"certify-chain", "Hessian signature of the chain product"},
                              {"hodge", "2x2 Hodge-Riemann determinant test"},
                              {"rhw", "log-concavity report"},
                              {"ffcount", "finite-field point count against chi"},
                              {"pf", "Perron-Frobenius eigenpair of a matrix file"}};
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", in.path, "input file");
    const std::string name = s.name;
    if (name == "certify" || name == "certify-chain") {
      sub->add_option("--directions", in.directions, "number of seeded ample directions")->capture_default_str();
    }
    if (name == "certify-chain") sub->add_option("--chain", in.chain, "interior chain flat ids")->delimiter(',')->required();
    if (name == "ffcount") sub->add_option("--power", in.powers, "extension degrees b (default 1 and 2)")->delimiter(',');
    if (name == "chromatic") sub->parse_complete_callback([&in, &app] {
      if (app.get_option("--format")->count() == 0) in.format = "graph";
    });
  }

  std::vector<const char*> argv{"mlc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kError;
  }

  try {
    for (const auto& t : eps_text) {
      Rational e = parse_rational(t);
      if (e <= 0) throw Error(ErrorCode::kInvalidParameters, "--eps must be positive");
      cfg.eps.push_back(e);
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "ffcount") return cmd_ffcount(in, cfg, out);
    if (cmd == "pf") return cmd_pf(in, cfg, out);
    const Loaded l = load(in, cfg);
    if (cmd == "check") return cmd_check(l, cfg, out);
    if (cmd == "charpoly") return cmd_charpoly(l, cfg, out);
    if (cmd == "chromatic") return cmd_chromatic(l, cfg, out);
    if (cmd == "volume") return cmd_volume(l, cfg, out);
    if (cmd == "mixed") return cmd_mixed(l, cfg, out);
    if (cmd == "certify") return cmd_certify(l, in, cfg, out);
    if (cmd == "certify-chain") return cmd_certify_chain(l, in, cfg, out);
    if (cmd == "hodge") return cmd_hodge(l, cfg, out);
    if (cmd == "rhw") return cmd_rhw(l, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace mlc
