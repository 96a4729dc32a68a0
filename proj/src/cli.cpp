#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkm.hpp"
#include "graph.hpp"
#include "poly.hpp"
#include "roots.hpp"
#include "schubert.hpp"
#include "util.hpp"

namespace gkm {

namespace {

struct JobSpec {
  std::string family_text;
  int rank = 0;
  std::string parabolic_text;
  std::string preset;
  std::string format = "text";
  std::string output_path;
  std::string config_path;

  std::string class_name;
  std::string at_name;
  std::string w_name;
  std::string u_name;
  std::string v_name;
  std::string input_path;
  std::string word_text;
  std::string basis_choice = "t";
  bool ordinary = false;
};

struct Geometry {
  Family family = Family::A;
  int rank = 0;
  ParabolicJ J;
  bool preset = false;
  int k = 0;
  int n_or_rank = 0;
};

long long parse_positive(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long value = std::stoll(text, &pos);
    if (pos != text.size() || value <= 0) throw UsageError("");
    return value;
  } catch (const UsageError&) {
    throw UsageError(what + " must be a positive integer, got '" + text + "'");
  } catch (const std::exception&) {
    throw UsageError(what + " must be a positive integer, got '" + text + "'");
  }
}

Limits load_limits(const std::string& config_flag) {
  Limits lim;
  lim.max_group_order = 40320;
  lim.max_reduced_word_length = 12;
  std::string path = config_flag;
  if (path.empty()) {
    const char* env = std::getenv("GKMCALC_CONFIG");
    if (env != nullptr) path = env;
  }
  if (path.empty()) return lim;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + " is not key=value");
    }
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key == "max_group_order") {
      lim.max_group_order = static_cast<std::uint64_t>(parse_positive(value, key));
    } else if (key == "max_reduced_word_length") {
      lim.max_reduced_word_length = static_cast<int>(parse_positive(value, key));
    } else {
      throw UsageError("unknown config key '" + key + "' on line " + std::to_string(lineno));
    }
  }
  return lim;
}

std::vector<int> parse_index_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const std::string& piece : split(text, ',')) {
    std::string s = trim(piece);
    if (s.empty()) throw UsageError(what + " has an empty entry: '" + text + "'");
    out.push_back(static_cast<int>(parse_positive(s, what + " entry")));
  }
  return out;
}

Geometry resolve_geometry(const JobSpec& spec, bool have_family, bool have_rank,
                          bool have_parabolic) {
  Geometry geo;
  bool explicit_flags = have_family || have_rank || have_parabolic;
  if (!spec.preset.empty()) {
    if (explicit_flags) {
      throw UsageError("give either --preset or --family/--rank/--parabolic, not both");
    }
    auto colon = spec.preset.find(':');
    if (colon == std::string::npos) {
      throw UsageError("preset must look like grassmannian:k,n or isotropic-b|c|d:k,n");
    }
    std::string name = spec.preset.substr(0, colon);
    std::vector<int> kn = parse_index_list(spec.preset.substr(colon + 1), "preset parameter");
    if (kn.size() != 2) {
      throw UsageError("preset needs exactly two parameters k,n: '" + spec.preset + "'");
    }
    geo.preset = true;
    geo.k = kn[0];
    geo.n_or_rank = kn[1];
    if (name == "grassmannian") {
      geo.family = Family::A;
      geo.rank = kn[1] - 1;
    } else if (name == "isotropic-b") {
      geo.family = Family::B;
      geo.rank = kn[1];
    } else if (name == "isotropic-c") {
      geo.family = Family::C;
      geo.rank = kn[1];
    } else if (name == "isotropic-d") {
      geo.family = Family::D;
      geo.rank = kn[1];
    } else {
      throw UsageError("unknown preset '" + name + "'");
    }
    return geo;
  }
  if (!have_family || !have_rank) {
    throw UsageError("--family and --rank are required when no preset is given");
  }
  geo.family = family_from_string(spec.family_text);
  if (spec.rank < 1) throw UsageError("rank must be at least 1");
  if (geo.family == Family::D && spec.rank < 2) {
    throw UsageError("family D needs rank at least 2");
  }
  geo.rank = spec.rank;
  std::vector<int> idx;
  if (have_parabolic && !trim(spec.parabolic_text).empty()) {
    idx = parse_index_list(spec.parabolic_text, "--parabolic");
  }
  geo.J = ParabolicJ(std::move(idx), geo.rank);
  return geo;
}

MomentGraph build_graph(const Geometry& geo, const Limits& lim) {
  if (geo.preset) return build_bitstring(geo.family, geo.k, geo.n_or_rank, lim);
  RootSystem R = build_root_system(geo.family, geo.rank);
  return build_generic(R, geo.J, lim);
}

bool looks_like_bits(const std::string& token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c != '0' && c != '1') return false;
  }
  return true;
}

int resolve_vertex(const MomentGraph& g, const std::string& token) {
  if (looks_like_bits(token) && !g.vertices.empty() && !g.vertices[0].bits.empty()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.vertices[v].bits == token) return v;
    }
    throw UsageError("no vertex carries the bit string '" + token + "'");
  }
  WeylElement w = g.rs.parse_element(token);
  return g.coset_vertex(w);
}

WeylElement resolve_element(const MomentGraph& g, const std::string& token) {
  if (looks_like_bits(token) && !g.vertices.empty() && !g.vertices[0].bits.empty()) {
    return g.vertices[resolve_vertex(g, token)].coset.min_rep;
  }
  return g.rs.parse_element(token);
}

GkmClass single_flowup_class(const MomentGraph& g, int wid) {
  GkmClass out(&g);
  const WeylElement& w = g.vertices[wid].coset.min_rep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    Polynomial p = billey_localize(g.rs, w, g.vertices[v].coset.min_rep);
    if (!p.is_zero()) out.set(v, std::move(p));
  }
  return out;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file: " + path);
  try {
    nlohmann::json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void require_format(const std::string& format, bool allow_dot) {
  if (format == "text" || format == "json") return;
  if (format == "dot" && allow_dot) return;
  if (format == "dot") throw UsageError("dot format only applies to the graph command");
  throw UsageError("unknown format '" + format + "' (expected text, json, or dot)");
}

std::string render_class_text(const MomentGraph& g, const GkmClass& p) {
  if (p.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [v, val] : p.values()) {
    os << "[" << g.vertices[v].word << "] = " << poly_text(val) << "\n";
  }
  return os.str();
}

std::string render_class(const MomentGraph& g, const GkmClass& p, const std::string& format) {
  if (format == "json") return dump_json(class_to_json(p));
  return render_class_text(g, p);
}

std::string render_graph_text(const MomentGraph& g) {
  std::ostringstream os;
  os << "moment graph: family " << family_name(g.rs.family) << ", rank " << g.rs.rank << ", ";
  if (g.J.empty()) {
    os << "full flag";
  } else {
    os << "J = " << g.J.str();
  }
  os << "\n";
  os << "vertices: " << g.vertex_count() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const GraphVertex& vx = g.vertices[v];
    os << "  " << v << "  [" << vx.word << "]  length " << vx.coset.length;
    if (!vx.bits.empty()) os << "  bits " << vx.bits;
    os << "\n";
  }
  os << "edges: " << g.edges.size() << "\n";
  for (const GraphEdge& e : g.edges) {
    os << "  [" << g.vertices[e.src].word << "] -> [" << g.vertices[e.dst].word << "]  "
       << root_text(e.label) << "\n";
  }
  return os.str();
}

std::string run_graph(const MomentGraph& g, const std::string& format) {
  if (format == "json") return dump_json(graph_to_json(g));
  if (format == "dot") return graph_to_dot(g);
  return render_graph_text(g);
}

std::string run_localize(const MomentGraph& g, const JobSpec& spec) {
  int wid = resolve_vertex(g, spec.class_name);
  int vid = resolve_vertex(g, spec.at_name);
  Polynomial p = billey_localize(g.rs, g.vertices[wid].coset.min_rep,
                                 g.vertices[vid].coset.min_rep);
  if (spec.format == "json") {
    return dump_json(nlohmann::json{
        {"schema_version", 1},
        {"class", g.vertices[wid].word},
        {"at", g.vertices[vid].word},
        {"value", poly_text(p)},
    });
  }
  return poly_text(p) + "\n";
}

std::string run_basis(const MomentGraph& g, const JobSpec& spec) {
  FlowUpBasis basis = flowup_basis(g);
  if (spec.format == "json") {
    nlohmann::json classes = nlohmann::json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
      nlohmann::json values = nlohmann::json::object();
      for (const auto& [u, val] : basis.classes[v].values()) {
        values[g.vertices[u].word] = poly_text(val);
      }
      classes[g.vertices[v].word] = std::move(values);
    }
    return dump_json(nlohmann::json{
        {"schema_version", 1},
        {"graph_ref", graph_ref(g)},
        {"classes", std::move(classes)},
    });
  }
  std::ostringstream os;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v > 0) os << "\n";
    os << "class [" << g.vertices[v].word << "]\n";
    for (const auto& [u, val] : basis.classes[v].values()) {
      os << "  [" << g.vertices[u].word << "] = " << poly_text(val) << "\n";
    }
  }
  return os.str();
}

GkmClass load_operand(const MomentGraph& g, const JobSpec& spec, bool verify) {
  bool have_class = !spec.class_name.empty();
  bool have_input = !spec.input_path.empty();
  if (have_class == have_input) {
    throw UsageError("give exactly one of --class or --input");
  }
  GkmClass p = have_class ? single_flowup_class(g, resolve_vertex(g, spec.class_name))
                          : class_from_json(g, read_json_file(spec.input_path));
  if (verify && have_input && !verify_gkm(p).pass) {
    throw VerificationError("input class violates the GKM divisibility conditions");
  }
  return p;
}

std::string run_act(const MomentGraph& g, const JobSpec& spec) {
  WeylElement w = resolve_element(g, spec.w_name);
  GkmClass p = load_operand(g, spec, false);
  return render_class(g, weyl_act(w, p), spec.format);
}

std::string run_ddiff(const MomentGraph& g, const JobSpec& spec) {
  std::vector<int> word = parse_index_list(spec.word_text, "--word");
  for (int i : word) {
    if (i < 1 || i > g.rs.rank) {
      throw UsageError("--word entry " + std::to_string(i) + " is out of range");
    }
  }
  GkmClass p = load_operand(g, spec, true);
  return render_class(g, delta_word(word, p), spec.format);
}

std::string run_decompose(const MomentGraph& g, const JobSpec& spec) {
  GkmClass p = class_from_json(g, read_json_file(spec.input_path));
  if (!verify_gkm(p).pass) {
    throw VerificationError("input class violates the GKM divisibility conditions");
  }
  FlowUpBasis basis = flowup_basis(g);
  std::map<int, Polynomial> coeffs = decompose(p, basis);
  if (spec.format == "json") {
    nlohmann::json c = nlohmann::json::object();
    for (const auto& [v, poly] : coeffs) c[g.vertices[v].word] = poly_text(poly);
    return dump_json(nlohmann::json{{"schema_version", 1}, {"coefficients", std::move(c)}});
  }
  if (coeffs.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [v, poly] : coeffs) {
    os << "c[" << g.vertices[v].word << "] = " << poly_text(poly) << "\n";
  }
  return os.str();
}

std::string run_constants(const MomentGraph& g, const JobSpec& spec, const Limits& lim) {
  int uid = resolve_vertex(g, spec.u_name);
  int vid = resolve_vertex(g, spec.v_name);
  FlowUpBasis basis = flowup_basis(g);
  if (spec.ordinary) {
    IdealReducer reducer(g.rs, lim);
    ProductIdentityReport report = verify_product_identity(basis, reducer, uid, vid, lim);
    if (spec.format == "json") return dump_json(report_to_json(report));
    std::ostringstream os;
    for (const auto& [w, c] : report.constants) os << "c[" << w << "] = " << c << "\n";
    os << "in ideal: " << (report.in_ideal ? "true" : "false") << "\n";
    return os.str();
  }
  std::map<int, Polynomial> coeffs = structure_constants(basis, uid, vid, true);
  if (spec.format == "json") {
    nlohmann::json c = nlohmann::json::object();
    for (const auto& [w, poly] : coeffs) c[g.vertices[w].word] = poly_text(poly);
    return dump_json(nlohmann::json{
        {"schema_version", 1},
        {"u", g.vertices[uid].word},
        {"v", g.vertices[vid].word},
        {"constants", std::move(c)},
    });
  }
  if (coeffs.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [w, poly] : coeffs) {
    os << "c[" << g.vertices[w].word << "] = " << poly_text(poly) << "\n";
  }
  return os.str();
}

std::string run_schubert_poly(const MomentGraph& g, const JobSpec& spec, const Limits& lim) {
  if (spec.basis_choice != "t" && spec.basis_choice != "alpha") {
    throw UsageError("--basis must be t or alpha");
  }
  WeylElement w = resolve_element(g, spec.w_name);
  SchubertPolynomial sp = grassmannian_schubert(g.rs, g.J, w, lim);
  if (spec.format == "json") {
    return dump_json(nlohmann::json{
        {"schema_version", 1},
        {"w", g.rs.element_text(sp.owner)},
        {"t_form", poly_text(sp.poly)},
        {"alpha_form", sp.basis_form.str()},
        {"residual", sp.basis_form.residual_flag},
    });
  }
  if (spec.basis_choice == "alpha") return sp.basis_form.str() + "\n";
  return poly_text(sp.poly) + "\n";
}

std::string run_selftest(const MomentGraph& g, const Limits& lim, bool& failed) {
  std::ostringstream os;
  failed = false;
  auto suite = [&](const std::string& name, auto&& body) {
    try {
      body();
      os << "ok " << name << "\n";
    } catch (const std::exception& e) {
      failed = true;
      os << "FAIL " << name << ": " << e.what() << "\n";
    }
  };
  auto check = [](bool cond, const std::string& msg) {
    if (!cond) throw VerificationError(msg);
  };

  const RootSystem& R = g.rs;
  suite("graph structure", [&] {
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<Root> labels;
      for (const GraphEdge& e : g.edges) {
        check(g.vertices[e.src].coset.length > g.vertices[e.dst].coset.length,
              "edge does not point from longer to shorter");
        if (e.src == v) labels.push_back(e.label);
      }
      std::sort(labels.begin(), labels.end());
      check(static_cast<int>(labels.size()) == g.vertices[v].coset.length,
            "out-degree differs from coset length at vertex " + g.vertices[v].word);
      check(labels == R.inversions(g.vertices[v].coset.min_rep, g.J),
            "outgoing labels differ from the inversion set at vertex " + g.vertices[v].word);
    }
  });

  FlowUpBasis basis = flowup_basis(g);
  suite("flow-up basis", [&] {
    for (int v = 0; v < g.vertex_count(); ++v) {
      const GkmClass& p = basis.classes[v];
      check(verify_gkm(p).pass, "basis class fails the GKM conditions");
      check(!p.values().empty() && p.values().begin()->first == v,
            "support does not start at the owning vertex");
      check(p.value(v) == basis.pivots[v], "base value differs from the inversion product");
      auto deg = p.degree();
      check(deg && *deg == g.vertices[v].coset.length, "class degree differs from coset length");
    }
  });

  suite("generate from top", [&] {
    FlowUpBasis top = generate_from_top(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
      check(top.classes[v] == basis.classes[v], "top-down class differs at " + g.vertices[v].word);
    }
  });

  suite("divided differences", [&] {
    for (int i = 1; i <= R.rank; ++i) {
      const std::vector<int>& act = g.left_action(i);
      for (int v = 0; v < g.vertex_count(); ++v) {
        GkmClass image = delta(i, basis.classes[v]);
        int sv = act[v];
        if (g.vertices[sv].coset.length < g.vertices[v].coset.length) {
          check(image == basis.classes[sv], "delta does not step down the basis");
        } else {
          check(image.is_zero(), "delta is nonzero on an ascent");
        }
      }
    }
  });

  int sample = std::min(1, g.vertex_count() - 1);
  suite("decomposition", [&] {
    GkmClass prod = basis.classes[sample] * basis.classes[sample];
    std::map<int, Polynomial> coeffs = decompose(prod, basis);
    GkmClass back(&g);
    for (const auto& [v, c] : coeffs) back += basis.classes[v].scaled(c);
    check(back == prod, "decomposition does not reassemble the product");
  });

  suite("structure constants", [&] {
    auto ordinary = structure_constants(basis, sample, sample, false);
    for (const auto& [w, c] : ordinary) {
      Rational k = c.constant_term();
      check(k.is_integer() && k.sign() >= 0,
            "ordinary constant at " + g.vertices[w].word + " is not a nonnegative integer");
    }
  });
  (void)lim;

  os << (failed ? "selftest failed\n" : "selftest passed\n");
  return os.str();
}

void emit(const JobSpec& spec, CliResult& result, const std::string& payload) {
  if (spec.output_path.empty()) {
    result.out += payload;
    return;
  }
  std::ofstream out(spec.output_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + spec.output_path);
  out << payload;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  JobSpec spec;

  CLI::App app{"Exact equivariant Schubert calculus on GKM moment graphs"};
  app.name("gkmcalc");
  app.require_subcommand(1);

  auto* opt_family = app.add_option("--family", spec.family_text, "Root system family: A, B, C, D");
  auto* opt_rank = app.add_option("--rank", spec.rank, "Root system rank");
  auto* opt_parabolic =
      app.add_option("--parabolic", spec.parabolic_text,
                     "Comma-separated simple indices of the parabolic (empty = full flag)");
  app.add_option("--preset", spec.preset,
                 "Named space: grassmannian:k,n or isotropic-b|c|d:k,rank");
  app.add_option("--format", spec.format, "Output format: text, json, or dot")
      ->default_str("text");
  app.add_option("--output", spec.output_path, "Write output to this file instead of stdout");
  app.add_option("--config", spec.config_path,
                 "Key=value config file with resource caps (or set GKMCALC_CONFIG)");

  auto* cmd_graph = app.add_subcommand("graph", "Emit the moment graph");
  auto* cmd_localize = app.add_subcommand("localize", "Localization of a flow-up class");
  cmd_localize->add_option("--class", spec.class_name, "Flow-up class, by coset")->required();
  cmd_localize->add_option("--at", spec.at_name, "Vertex to localize at")->required();
  auto* cmd_basis = app.add_subcommand("basis", "Emit the whole flow-up basis");
  auto* cmd_act = app.add_subcommand("act", "Apply a Weyl group element to a class");
  cmd_act->add_option("--w", spec.w_name, "Acting Weyl element")->required();
  cmd_act->add_option("--class", spec.class_name, "Flow-up class operand");
  cmd_act->add_option("--input", spec.input_path, "JSON class file operand");
  auto* cmd_ddiff = app.add_subcommand("ddiff", "Apply a divided difference word");
  cmd_ddiff->add_option("--word", spec.word_text, "Comma-separated simple indices")->required();
  cmd_ddiff->add_option("--class", spec.class_name, "Flow-up class operand");
  cmd_ddiff->add_option("--input", spec.input_path, "JSON class file operand");
  auto* cmd_decompose = app.add_subcommand("decompose", "Expand a class over the flow-up basis");
  cmd_decompose->add_option("--input", spec.input_path, "JSON class file")->required();
  auto* cmd_constants = app.add_subcommand("constants", "Structure constants of a basis product");
  cmd_constants->add_option("--u", spec.u_name, "First coset")->required();
  cmd_constants->add_option("--v", spec.v_name, "Second coset")->required();
  cmd_constants->add_flag("--ordinary", spec.ordinary,
                          "Ordinary cohomology constants with the mod-I identity check");
  auto* cmd_schubert = app.add_subcommand("schubert-poly", "Grassmannian Schubert polynomial");
  cmd_schubert->add_option("--w", spec.w_name, "Minimal coset representative")->required();
  cmd_schubert->add_option("--basis", spec.basis_choice, "Print basis: t or alpha")
      ->default_str("t");
  auto* cmd_selftest = app.add_subcommand("selftest", "Run the invariant suites on this space");

  for (CLI::App* sub : {cmd_graph, cmd_localize, cmd_basis, cmd_act, cmd_ddiff, cmd_decompose,
                        cmd_constants, cmd_schubert, cmd_selftest}) {
    sub->fallthrough();
  }

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("gkmcalc");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out_stream;
    std::ostringstream err_stream;
    int code = app.exit(e, out_stream, err_stream);
    result.out += out_stream.str();
    result.err += err_stream.str();
    result.exit_code = code == 0 ? 0 : 2;
    return result;
  }

  try {
    Limits lim = load_limits(spec.config_path);
    Geometry geo = resolve_geometry(spec, opt_family->count() > 0, opt_rank->count() > 0,
                                    opt_parabolic->count() > 0);
    require_format(spec.format, app.got_subcommand(cmd_graph));
    MomentGraph g = build_graph(geo, lim);

    std::string payload;
    bool selftest_failed = false;
    if (app.got_subcommand(cmd_graph)) {
      payload = run_graph(g, spec.format);
    } else if (app.got_subcommand(cmd_localize)) {
      payload = run_localize(g, spec);
    } else if (app.got_subcommand(cmd_basis)) {
      payload = run_basis(g, spec);
    } else if (app.got_subcommand(cmd_act)) {
      payload = run_act(g, spec);
    } else if (app.got_subcommand(cmd_ddiff)) {
      payload = run_ddiff(g, spec);
    } else if (app.got_subcommand(cmd_decompose)) {
      payload = run_decompose(g, spec);
    } else if (app.got_subcommand(cmd_constants)) {
      payload = run_constants(g, spec, lim);
    } else if (app.got_subcommand(cmd_schubert)) {
      payload = run_schubert_poly(g, spec, lim);
    } else if (app.got_subcommand(cmd_selftest)) {
      payload = run_selftest(g, lim, selftest_failed);
    }
    emit(spec, result, payload);
    if (selftest_failed) result.exit_code = 4;
  } catch (const UsageError& e) {
    result.err += std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
  } catch (const ResourceError& e) {
    result.err += std::string("error: ") + e.what() + "\n";
    result.exit_code = 3;
  } catch (const VerificationError& e) {
    result.err += std::string("error: ") + e.what() + "\n";
    result.exit_code = 4;
  } catch (const std::exception& e) {
    result.err += std::string("internal error: ") + e.what() + "\n";
    result.exit_code = 1;
  }
  return result;
}

}  // namespace gkm
