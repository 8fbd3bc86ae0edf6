// orbitline -- command-line front end over the C library surface.
//
// Every subcommand reads exact-rational JSON, drives one library call, and
// prints a machine-readable report. Identical inputs, budgets, and seeds
// produce byte-identical output; wall-clock timing is opt-in and goes to
// stderr so it never perturbs the report stream.

#include <orbitline.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using json = nlohmann::ordered_json;

// Usage/runtime problem detected on the CLI side (before the library runs).
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SystemDeleter {
  void operator()(ol_system* s) const { ol_system_free(s); }
};
using SystemHandle = std::unique_ptr<ol_system, SystemDeleter>;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { ol_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : std::string(ptr); }
};

struct GlobalOpts {
  std::string system_path;
  long long budget_words = 0;
  long long budget_digits = 0;
  unsigned long long seed = 0;
  bool json_doc = false;
  bool pretty = false;
  bool timing = false;
};

[[noreturn]] void die(const std::string& msg) { throw CliError(msg); }

void check(ol_status st) {
  if (st >= 10) die(ol_last_error());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) die("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// "x,y" with each part an exact rational.
json parse_base_flag(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) die("--base wants \"x,y\" with exact rationals");
  return json{{"x", parts[0]}, {"y", parts[1]}};
}

// "diag" or "a/b,c/d" meaning X = (a/b) Y + (c/d).
json parse_line_flag(const std::string& s) {
  if (s == "diag" || s == "diagonal") return json{{"kind", "diagonal"}};
  const auto parts = split(s, ',');
  if (parts.size() != 2) die("--line wants 'diag' or \"a/b,c/d\"");
  return json{{"kind", "general"}, {"alpha", parts[0]}, {"beta", parts[1]}};
}

// "a/b,c/d" meaning alpha*X + beta.
json parse_linear_flag(const std::string& s, const char* flag) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) die(std::string(flag) + " wants \"alpha,beta\" with exact rationals");
  return json{{"alpha", parts[0]}, {"beta", parts[1]}};
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const std::string& part : split(s, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      die(std::string("bad integer '") + part + "' in " + what);
    }
  }
  return out;
}

// "pre:1,2/cyc:2,1", "cyc:1", or the name of a sequence stored in the
// system file.
json parse_seq_flag(const std::string& s) {
  if (s.find(':') == std::string::npos) return json(s);
  json out{{"preperiod", json::array()}, {"cycle", json::array()}};
  for (const std::string& part : split(s, '/')) {
    if (part.rfind("pre:", 0) == 0) {
      out["preperiod"] = parse_int_list(part.substr(4), "--seq preperiod");
    } else if (part.rfind("cyc:", 0) == 0) {
      out["cycle"] = parse_int_list(part.substr(4), "--seq cycle");
    } else {
      die("--seq parts must start with 'pre:' or 'cyc:'");
    }
  }
  if (out["cycle"].empty()) die("--seq needs a nonempty 'cyc:' part");
  return out;
}

// Polynomial argument: inline JSON ({"coeffs": [...]} or a bare coefficient
// array) or @path to a file holding the same.
json parse_poly_flag(const std::string& s, const char* flag) {
  const std::string text = s.rfind('@', 0) == 0 ? slurp(s.substr(1)) : s;
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) die(std::string(flag) + ": invalid JSON");
  return j;
}

json current_budget(const ol_system* sys) {
  OwnedString out;
  check(ol_system_to_json(sys, &out.ptr));
  return json::parse(out.str()).at("budget");
}

// Loads the system file, applies base/line overrides before validation and
// budget flags plus the ORBITLINE_BUDGET_DIGITS hard cap after it.
SystemHandle load_system(const GlobalOpts& g, const std::optional<json>& base_override,
                         const std::optional<json>& line_override) {
  if (g.system_path.empty()) die("this subcommand needs --system FILE");
  json doc = json::parse(slurp(g.system_path), nullptr, false);
  if (doc.is_discarded()) die("'" + g.system_path + "' is not valid JSON");
  if (base_override.has_value()) doc["base"] = *base_override;
  if (line_override.has_value()) doc["line"] = *line_override;
  if (g.seed != 0) doc["rng_seed"] = g.seed;

  ol_system* raw = nullptr;
  check(ol_system_parse(doc.dump().c_str(), &raw));
  SystemHandle sys(raw);
  if (g.budget_words != 0 || g.budget_digits != 0) {
    check(ol_system_set_budget(sys.get(), g.budget_words, g.budget_digits));
  }
  if (const char* cap_text = std::getenv("ORBITLINE_BUDGET_DIGITS")) {
    long long cap = 0;
    try {
      cap = std::stoll(cap_text);
    } catch (const std::exception&) {
      die("ORBITLINE_BUDGET_DIGITS must be an integer");
    }
    if (cap > 0 && current_budget(sys.get()).at("max_digits").get<long long>() > cap) {
      check(ol_system_set_budget(sys.get(), 0, cap));
    }
  }
  return sys;
}

const char* const kVersionKey = "version";

int emit_report(const GlobalOpts& g, const std::string& command, ol_status st,
                const json& results, const ol_system* sys) {
  json report{{"command", command}, {"results", results}};
  if (sys != nullptr) report["budget"] = current_budget(sys);
  if (g.seed != 0) report["seed"] = g.seed;
  report[kVersionKey] = ol_version();
  std::cout << (g.pretty ? report.dump(2) : report.dump()) << "\n";
  return st == OL_OK ? 0 : 2;
}

json parse_out(const OwnedString& s) { return json::parse(s.str()); }

// ---- subcommand drivers --------------------------------------------------

struct OrbitOpts {
  std::string mode = "semigroup";
  int depth = 3;
  std::string seq;
  bool no_dedup = false;
  std::string base;
  std::string line;
  int extract_support = 0;  // 0 = no extraction
};

int run_orbit(const GlobalOpts& g, const OrbitOpts& o, bool intersect) {
  std::optional<json> base_override, line_override;
  if (!o.base.empty()) base_override = parse_base_flag(o.base);
  if (!o.line.empty()) line_override = parse_line_flag(o.line);
  SystemHandle sys = load_system(g, base_override, line_override);

  json params{{"mode", o.mode}, {"intersect", intersect}};
  if (o.mode == "semigroup") {
    params["max_depth"] = o.depth;
    params["dedup"] = !o.no_dedup;
  } else {
    if (o.seq.empty()) die("sequence orbits need --seq");
    params["sequence"] = parse_seq_flag(o.seq);
    params["n_max"] = o.depth;
  }

  OwnedString out;
  const ol_status st = ol_orbit(sys.get(), params.dump().c_str(), &out.ptr);
  check(st);
  json result = parse_out(out);

  std::optional<json> suffix;
  if (o.extract_support > 0) {
    json words = json::array();
    for (const json& rec : result.at("records")) {
      words.push_back(json{{"letters", rec.at("word")}, {"order", rec.at("order")}});
    }
    OwnedString sout;
    check(ol_extract_suffix(words.dump().c_str(), o.extract_support, &sout.ptr));
    suffix = parse_out(sout);
  }

  if (g.json_doc || g.pretty) {
    if (suffix.has_value()) result["suffix"] = *suffix;
    return emit_report(g, intersect ? "intersect" : "orbit", st, result, sys.get());
  }
  for (const json& rec : result.at("records")) {
    std::cout << rec.dump() << "\n";
  }
  json summary{{"truncated", result.at("truncated")},
               {"closed", result.at("closed")},
               {"words_visited", result.at("words_visited")},
               {"records", result.at("records").size()}};
  if (suffix.has_value()) summary["suffix"] = *suffix;
  summary[kVersionKey] = ol_version();
  std::cout << summary.dump() << "\n";
  return 0;
}

struct HeightOpts {
  std::string x;
  std::string map_poly;
  std::string shift;
};

int run_height(const GlobalOpts& g, const HeightOpts& o) {
  if (o.x.empty() && o.map_poly.empty() && o.shift.empty()) {
    die("height wants --x and/or --map / --shift");
  }
  json results = json::object();
  if (!o.x.empty()) {
    OwnedString out;
    check(ol_height_naive_detail(o.x.c_str(), &out.ptr));
    results["naive"] = parse_out(out);
  }
  if (!o.map_poly.empty()) {
    double c = 0.0;
    check(ol_height_map_constant(parse_poly_flag(o.map_poly, "--map").dump().c_str(), &c));
    results["map_constant"] = c;
  }
  if (!o.shift.empty()) {
    double c = 0.0;
    check(ol_height_shift_constant(parse_linear_flag(o.shift, "--shift").dump().c_str(), &c));
    results["shift_constant"] = c;
  }
  return emit_report(g, "height", OL_OK, results, nullptr);
}

struct CanonicalHeightOpts {
  std::string mode = "sequence";
  std::string seq;
  int coord = 0;
  std::string x0;
  double target_error = 1e-6;
  int max_depth = 64;
  int depth = 6;
};

int run_canonical_height(const GlobalOpts& g, const CanonicalHeightOpts& o) {
  SystemHandle sys = load_system(g, std::nullopt, std::nullopt);
  OwnedString out;
  if (o.mode == "sequence") {
    if (o.seq.empty()) die("canonical-height --mode sequence needs --seq");
    check(ol_height_sequence(sys.get(), parse_seq_flag(o.seq).dump().c_str(), o.coord,
                             o.x0.empty() ? nullptr : o.x0.c_str(), o.target_error,
                             o.max_depth, &out.ptr));
  } else if (o.mode == "eigensystem") {
    check(ol_height_eigensystem(sys.get(), o.coord, o.x0.empty() ? nullptr : o.x0.c_str(),
                                o.depth, &out.ptr));
  } else {
    die("--mode must be 'sequence' or 'eigensystem'");
  }
  return emit_report(g, "canonical-height", OL_OK, parse_out(out), sys.get());
}

int run_rigidity(const GlobalOpts& g, const std::string& a, const std::string& b,
                 const std::string& c, const std::string& d) {
  OwnedString out;
  const ol_status st = ol_solve_rigidity(parse_poly_flag(a, "--A").dump().c_str(),
                                         parse_poly_flag(b, "--B").dump().c_str(),
                                         parse_poly_flag(c, "--C").dump().c_str(),
                                         parse_poly_flag(d, "--D").dump().c_str(), &out.ptr);
  check(st);
  return emit_report(g, "rigidity", st, parse_out(out), nullptr);
}

struct SolveLinearOpts {
  std::string F, G;
  int i = 0, j = 0;
  int coord = 0;
};

int run_solve_linear(const GlobalOpts& g, const SolveLinearOpts& o) {
  std::string f_json, g_json;
  SystemHandle sys;
  if (!o.F.empty() || !o.G.empty()) {
    if (o.F.empty() || o.G.empty()) die("--F and --G go together");
    f_json = parse_poly_flag(o.F, "--F").dump();
    g_json = parse_poly_flag(o.G, "--G").dump();
  } else {
    if (o.i < 1 || o.j < 1) die("solve-linear wants --F/--G or generator indices --i/--j");
    sys = load_system(g, std::nullopt, std::nullopt);
    OwnedString sys_json;
    check(ol_system_to_json(sys.get(), &sys_json.ptr));
    const json doc = parse_out(sys_json);
    const auto& gens = doc.at("generators");
    if (o.i > static_cast<int>(gens.size()) || o.j > static_cast<int>(gens.size())) {
      die("generator index out of range");
    }
    const char* key = o.coord == 0 ? "f" : "g";
    f_json = gens[static_cast<std::size_t>(o.i - 1)].at(key).dump();
    g_json = gens[static_cast<std::size_t>(o.j - 1)].at(key).dump();
  }
  OwnedString out;
  const ol_status st = ol_solve_linear_pair(f_json.c_str(), g_json.c_str(), &out.ptr);
  check(st);
  json results = parse_out(out);
  if (o.i >= 1) {
    for (json& sol : results.at("solutions")) {
      sol["i"] = o.i;
      sol["j"] = o.j;
    }
  }
  return emit_report(g, "solve-linear", st, results, nullptr);
}

int run_verify_decomposition(const GlobalOpts& g, const std::string& f, const std::string& gg,
                             const std::string& witness) {
  json w = json::parse(witness, nullptr, false);
  if (w.is_discarded()) die("--witness: invalid JSON");
  int ok = 0;
  check(ol_verify_decomposition(parse_poly_flag(f, "--F").dump().c_str(),
                                parse_poly_flag(gg, "--G").dump().c_str(), w.dump().c_str(),
                                &ok));
  const ol_status st = ok == 1 ? OL_OK : OL_NOT_FOUND;
  return emit_report(g, "verify-decomposition", st, json{{"verified", ok == 1}}, nullptr);
}

int run_monomial_equiv(const GlobalOpts& g, const std::string& poly) {
  OwnedString out;
  const ol_status st =
      ol_poly_monomial_equivalent(parse_poly_flag(poly, "--poly").dump().c_str(), &out.ptr);
  check(st);
  return emit_report(g, "monomial-equiv", st, parse_out(out), nullptr);
}

int run_certificate(const GlobalOpts& g, int max_k, const std::string& link) {
  SystemHandle sys = load_system(g, std::nullopt, std::nullopt);
  std::string link_json;
  if (!link.empty()) link_json = parse_linear_flag(link, "--link").dump();
  OwnedString out;
  const ol_status st = ol_certificate_search(
      sys.get(), max_k, link.empty() ? nullptr : link_json.c_str(), &out.ptr);
  check(st);
  return emit_report(g, "certificate", st, parse_out(out), sys.get());
}

int run_conjugate(const GlobalOpts& g, const std::string& l) {
  SystemHandle sys = load_system(g, std::nullopt, std::nullopt);
  ol_system* raw = nullptr;
  check(ol_conjugate(sys.get(), parse_linear_flag(l, "--l").dump().c_str(), &raw));
  SystemHandle image(raw);
  OwnedString out;
  check(ol_system_to_json(image.get(), &out.ptr));
  return emit_report(g, "conjugate", OL_OK, parse_out(out), image.get());
}

struct CommonWordOpts {
  std::string phi, psi;
  int m_max = 4;
  int k_max = 4;
  int coord = 0;
};

int run_common_word(const GlobalOpts& g, const CommonWordOpts& o) {
  if (o.phi.empty() || o.psi.empty()) die("common-word needs --phi and --psi");
  SystemHandle sys = load_system(g, std::nullopt, std::nullopt);
  OwnedString out;
  const ol_status st =
      ol_common_word(sys.get(), o.coord, parse_seq_flag(o.phi).dump().c_str(),
                     parse_seq_flag(o.psi).dump().c_str(), o.m_max, o.k_max, &out.ptr);
  check(st);
  return emit_report(g, "common-word", st, parse_out(out), sys.get());
}

struct FinitenessOpts {
  std::string criterion;
  std::string seq;
  double target_error = 1e-6;
  int max_depth = 64;
  int verify_depth = 12;
  int k_max = 6;
  int detect_depth = 8;
};

int run_finiteness(const GlobalOpts& g, const FinitenessOpts& o) {
  SystemHandle sys = load_system(g, std::nullopt, std::nullopt);
  OwnedString out;
  ol_status st = OL_OK;
  if (o.criterion == "degree") {
    if (o.seq.empty()) die("finiteness --criterion degree needs --seq");
    const json params{{"sequence", parse_seq_flag(o.seq)},
                      {"target_error", o.target_error},
                      {"max_depth", o.max_depth},
                      {"verify_depth", o.verify_depth}};
    st = ol_finiteness_degree(sys.get(), params.dump().c_str(), &out.ptr);
  } else if (o.criterion == "heightsum") {
    st = ol_finiteness_heightsum(sys.get(), o.k_max, o.detect_depth, &out.ptr);
  } else {
    die("--criterion must be 'degree' or 'heightsum'");
  }
  check(st);
  return emit_report(g, "finiteness", st, parse_out(out), sys.get());
}

int run_integral_solutions(const GlobalOpts& g, const std::string& f, const std::string& gg,
                           long long bound) {
  OwnedString out;
  check(ol_integral_solutions(parse_poly_flag(f, "--F").dump().c_str(),
                              parse_poly_flag(gg, "--G").dump().c_str(), bound, &out.ptr));
  return emit_report(g, "integral-solutions", OL_OK, parse_out(out), nullptr);
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  CLI::App app{"exact polynomial semigroup dynamics on the plane"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  // Global flags are accepted before or after the subcommand name.
  auto add_cmd = [&app](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->fallthrough();
    return cmd;
  };
  app.add_option("--system", g.system_path, "system definition JSON file")->expected(1);
  app.add_option("--budget-words", g.budget_words, "override search word budget");
  app.add_option("--budget-digits", g.budget_digits, "override digit-size budget");
  app.add_option("--seed", g.seed, "seed echoed in reports and stored in the system");
  app.add_flag("--json", g.json_doc, "single JSON document even for orbit records");
  app.add_flag("--pretty", g.pretty, "indented JSON output");
  app.add_flag("--timing", g.timing, "wall time to stderr (kept out of reports)");

  OrbitOpts orbit;
  auto* orbit_cmd = add_cmd("orbit", "enumerate orbit points");
  orbit_cmd->add_option("--mode", orbit.mode, "semigroup|forward|coherent");
  orbit_cmd->add_option("--depth", orbit.depth, "max word length / chain length");
  orbit_cmd->add_option("--seq", orbit.seq, "pre:..../cyc:.... or stored name");
  orbit_cmd->add_flag("--no-dedup", orbit.no_dedup, "keep repeated points");
  orbit_cmd->add_option("--base", orbit.base, "override base point \"x,y\"");
  orbit_cmd->add_option("--line", orbit.line, "override line: diag or \"a/b,c/d\"");

  OrbitOpts intersect;
  auto* intersect_cmd = add_cmd("intersect", "orbit points on the line");
  intersect_cmd->add_option("--mode", intersect.mode, "semigroup|forward|coherent");
  intersect_cmd->add_option("--depth", intersect.depth, "max word length / chain length");
  intersect_cmd->add_option("--seq", intersect.seq, "pre:..../cyc:.... or stored name");
  intersect_cmd->add_flag("--no-dedup", intersect.no_dedup, "keep repeated points");
  intersect_cmd->add_option("--base", intersect.base, "override base point \"x,y\"");
  intersect_cmd->add_option("--line", intersect.line, "override line: diag or \"a/b,c/d\"");
  intersect_cmd->add_option("--extract-suffix", intersect.extract_support,
                            "also extract the common outer maps (min support)");

  HeightOpts height;
  auto* height_cmd = add_cmd("height", "naive height and deviation constants");
  height_cmd->add_option("--x", height.x, "rational point");
  height_cmd->add_option("--map", height.map_poly, "polynomial JSON for its constant");
  height_cmd->add_option("--shift", height.shift, "linear map \"alpha,beta\"");

  CanonicalHeightOpts ch;
  auto* ch_cmd = add_cmd("canonical-height", "limit height estimates");
  ch_cmd->add_option("--mode", ch.mode, "sequence|eigensystem");
  ch_cmd->add_option("--seq", ch.seq, "sequence spec or stored name");
  ch_cmd->add_option("--coord", ch.coord, "0 = f maps, 1 = g maps");
  ch_cmd->add_option("--x0", ch.x0, "start point (default: system base)");
  ch_cmd->add_option("--target-error", ch.target_error, "error bound to reach");
  ch_cmd->add_option("--max-depth", ch.max_depth, "depth cap for sequence mode");
  ch_cmd->add_option("--depth", ch.depth, "level for eigensystem mode");

  std::string rig_a, rig_b, rig_c, rig_d;
  auto* rig_cmd = add_cmd("rigidity", "solve A∘B = C∘D for the linear link");
  rig_cmd->add_option("--A", rig_a)->required();
  rig_cmd->add_option("--B", rig_b)->required();
  rig_cmd->add_option("--C", rig_c)->required();
  rig_cmd->add_option("--D", rig_d)->required();

  SolveLinearOpts sl;
  auto* sl_cmd = add_cmd("solve-linear", "all (a,b) with a∘F = G∘b");
  sl_cmd->add_option("--F", sl.F, "polynomial JSON");
  sl_cmd->add_option("--G", sl.G, "polynomial JSON");
  sl_cmd->add_option("--i", sl.i, "generator index for F");
  sl_cmd->add_option("--j", sl.j, "generator index for G");
  sl_cmd->add_option("--coord", sl.coord, "0 = f maps, 1 = g maps");

  std::string vd_f, vd_g, vd_w;
  auto* vd_cmd = add_cmd("verify-decomposition", "check F = E∘H∘a, G = E∘c∘H∘b");
  vd_cmd->add_option("--F", vd_f)->required();
  vd_cmd->add_option("--G", vd_g)->required();
  vd_cmd->add_option("--witness", vd_w)->required();

  std::string me_poly;
  auto* me_cmd = add_cmd("monomial-equiv", "is P linear-equivalent to X^d?");
  me_cmd->add_option("--poly", me_poly)->required();

  int cert_max_k = 3;
  std::string cert_link;
  auto* cert_cmd = add_cmd("certificate", "word with equal coordinate compositions");
  cert_cmd->add_option("--max-k", cert_max_k, "deepest word length")->required();
  cert_cmd->add_option("--link", cert_link, "linear link \"alpha,beta\" (f = link∘g)");

  std::string conj_l;
  auto* conj_cmd = add_cmd("conjugate", "replace g_i by l∘g_i∘l⁻¹");
  conj_cmd->add_option("--l", conj_l, "linear map \"alpha,beta\"")->required();

  CommonWordOpts cw;
  auto* cw_cmd = add_cmd("common-word", "shifted windows composing equally");
  cw_cmd->add_option("--phi", cw.phi, "first sequence");
  cw_cmd->add_option("--psi", cw.psi, "second sequence");
  cw_cmd->add_option("--m-max", cw.m_max, "largest shift");
  cw_cmd->add_option("--k-max", cw.k_max, "largest window length");
  cw_cmd->add_option("--coord", cw.coord, "0 = f maps, 1 = g maps");

  FinitenessOpts fin;
  auto* fin_cmd = add_cmd("finiteness", "executable finiteness criteria");
  fin_cmd->add_option("--criterion", fin.criterion, "degree|heightsum")->required();
  fin_cmd->add_option("--seq", fin.seq, "sequence for the degree criterion");
  fin_cmd->add_option("--target-error", fin.target_error, "height interval width");
  fin_cmd->add_option("--max-depth", fin.max_depth, "height estimation depth cap");
  fin_cmd->add_option("--verify-depth", fin.verify_depth, "horizon for rows/hit checks");
  fin_cmd->add_option("--k-max", fin.k_max, "levels for the heightsum criterion");
  fin_cmd->add_option("--detect-depth", fin.detect_depth, "preperiodicity detection depth");

  std::string is_f, is_g;
  long long is_bound = 100;
  auto* is_cmd = add_cmd("integral-solutions", "integer points of F(x) = G(y)");
  is_cmd->add_option("--F", is_f)->required();
  is_cmd->add_option("--G", is_g)->required();
  is_cmd->add_option("--bound", is_bound, "box half-width")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto started = std::chrono::steady_clock::now();
  int rc = 1;
  try {
    if (orbit_cmd->parsed()) {
      rc = run_orbit(g, orbit, false);
    } else if (intersect_cmd->parsed()) {
      rc = run_orbit(g, intersect, true);
    } else if (height_cmd->parsed()) {
      rc = run_height(g, height);
    } else if (ch_cmd->parsed()) {
      rc = run_canonical_height(g, ch);
    } else if (rig_cmd->parsed()) {
      rc = run_rigidity(g, rig_a, rig_b, rig_c, rig_d);
    } else if (sl_cmd->parsed()) {
      rc = run_solve_linear(g, sl);
    } else if (vd_cmd->parsed()) {
      rc = run_verify_decomposition(g, vd_f, vd_g, vd_w);
    } else if (me_cmd->parsed()) {
      rc = run_monomial_equiv(g, me_poly);
    } else if (cert_cmd->parsed()) {
      rc = run_certificate(g, cert_max_k, cert_link);
    } else if (conj_cmd->parsed()) {
      rc = run_conjugate(g, conj_l);
    } else if (cw_cmd->parsed()) {
      rc = run_common_word(g, cw);
    } else if (fin_cmd->parsed()) {
      rc = run_finiteness(g, fin);
    } else if (is_cmd->parsed()) {
      rc = run_integral_solutions(g, is_f, is_g, is_bound);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = 1;
  }
  if (g.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    std::cerr << "wall_ms="
              << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
              << "\n";
  }
  return rc;
}
