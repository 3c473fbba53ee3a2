// polyreal: command-line front end for the polyhedral realization toolkit.
//
// Subcommands cover the library surface: tab (column listings), closure
// (truncated S-closure), positivity (first-row sign check with witness),
// equality (closure vs. column expansions), cone (inequality system),
// crystal-verify (generation / cone / Kostant cross-count), apply (raw
// operator words).  Exit codes: 0 success, 1 verification failure, 2 usage
// or configuration error.  All output is deterministic.

#include "CLI11.hpp"
#include "json.hpp"

#include "polyreal/cartan.hpp"
#include "polyreal/closure.hpp"
#include "polyreal/cone.hpp"
#include "polyreal/crystal.hpp"
#include "polyreal/linform.hpp"
#include "polyreal/sequence.hpp"
#include "polyreal/tableaux.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace polyreal;

namespace {

constexpr int kSchemaVersion = 1;

struct Config {
  std::string type;
  std::vector<std::string> p_bits;
  std::string period_csv;
  std::string prefix_csv;
  long window = -1;
  long pad = -1;
  int jobs = 1;
  bool use_json = false;
};

std::vector<int> parse_csv_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(what + ": empty list");
  return out;
}

Orientation parse_orientation(const CartanData& c, const std::vector<std::string>& bits) {
  std::vector<std::tuple<int, int, int>> assignments;
  for (const auto& token : bits) {
    auto eq = token.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--p expects i,j=bit, got '" + token + "'");
    auto pair = parse_csv_ints(token.substr(0, eq), "--p");
    if (pair.size() != 2) throw std::invalid_argument("--p expects i,j=bit, got '" + token + "'");
    auto val = parse_csv_ints(token.substr(eq + 1), "--p");
    if (val.size() != 1) throw std::invalid_argument("--p expects i,j=bit, got '" + token + "'");
    assignments.emplace_back(pair[0], pair[1], val[0]);
  }
  return make_orientation(c, assignments);
}

struct Instance {
  CartanData cartan;
  Sequence seq;
  std::optional<AdaptedSequence> adapted; // set when built from an orientation
};

Instance build_instance(const Config& cfg) {
  auto cartan = parse_type(cfg.type);
  if (!cartan) throw std::invalid_argument("--type: cannot parse '" + cfg.type + "'");
  bool have_p = !cfg.p_bits.empty();
  bool have_period = !cfg.period_csv.empty();
  if (have_p == have_period)
    throw std::invalid_argument("give exactly one of --p and --period");
  if (have_p) {
    if (!cfg.prefix_csv.empty()) throw std::invalid_argument("--prefix requires --period");
    auto a = AdaptedSequence::from_orientation(*cartan, parse_orientation(*cartan, cfg.p_bits));
    return Instance{*cartan, a.sequence(), std::move(a)};
  }
  std::vector<int> prefix;
  if (!cfg.prefix_csv.empty()) prefix = parse_csv_ints(cfg.prefix_csv, "--prefix");
  Sequence seq(*cartan, prefix, parse_csv_ints(cfg.period_csv, "--period"));
  return Instance{*cartan, seq, std::nullopt};
}

const AdaptedSequence& need_adapted(Instance& inst) {
  if (!inst.adapted) inst.adapted = AdaptedSequence::from_sequence(inst.seq);
  return *inst.adapted;
}

long default_window(const Instance& inst, long requested) {
  if (requested >= 0) return requested;
  return inst.cartan.n + 5;
}

std::string csv_of(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

json sequence_json(const Instance& inst) {
  json j;
  j["type"] = inst.cartan.type_name();
  j["prefix"] = inst.seq.prefix();
  j["period"] = inst.seq.period();
  if (inst.adapted) {
    json bits = json::object();
    for (const auto& [edge, bit] : inst.adapted->orientation().bits)
      bits[std::to_string(edge.first) + "," + std::to_string(edge.second)] = bit;
    j["orientation"] = bits;
    json pvals = json::array();
    for (int k = 0; k <= inst.cartan.n + 1; ++k) pvals.push_back(inst.adapted->P(k));
    j["P"] = pvals;
  }
  return j;
}

json form_json(const LinearForm& f) {
  json terms = json::array();
  for (const auto& [v, c] : f.terms()) terms.push_back({{"s", v.s}, {"j", v.j}, {"c", c}});
  return terms;
}

std::string word_text(const std::vector<long>& word, long seed) {
  std::ostringstream os;
  for (auto it = word.rbegin(); it != word.rend(); ++it) os << "S[" << *it << "] ";
  os << "x[" << seed << "]";
  return os.str();
}

// ----------------------------------------------------------------- tab ----

int cmd_tab(Config cfg, long rows, long base_rows, bool expand) {
  Instance inst = build_instance(cfg);
  const AdaptedSequence& a = need_adapted(inst);
  if (rows >= 0 && base_rows >= 0)
    throw std::invalid_argument("give at most one of --rows and --base-rows");
  std::vector<ColumnTableau> tabs;
  std::string mode;
  long bound;
  if (base_rows >= 0) {
    tabs = enumerate_tab_base_rows(a, base_rows);
    mode = "base-rows";
    bound = base_rows;
  } else {
    bound = rows >= 0 ? rows : inst.cartan.n + 5;
    tabs = enumerate_tab_window(a, bound);
    mode = "window";
  }
  if (cfg.use_json) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["sequence"] = sequence_json(inst);
    out["mode"] = mode;
    out["bound"] = bound;
    json list = json::array();
    for (const auto& t : tabs) {
      json jt;
      jt["text"] = tableau_text(inst.cartan, t);
      jt["entries"] = t.entries;
      jt["s"] = t.s;
      if (expand) {
        LinearForm f = expand_tableau(a, t);
        jt["expansion"] = form_json(f);
        jt["expansion_text"] = f.str();
      }
      list.push_back(std::move(jt));
    }
    out["tableaux"] = std::move(list);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "# " << inst.cartan.type_name() << " period (" << csv_of(inst.seq.period())
            << "), " << mode << " <= " << bound << ", " << tabs.size() << " columns\n";
  for (const auto& t : tabs) {
    std::cout << tableau_text(inst.cartan, t);
    if (expand) std::cout << " = " << expand_tableau(a, t).str();
    std::cout << "\n";
  }
  return 0;
}

// ------------------------------------------------------------- closure ----

int cmd_closure(Config cfg, bool full, bool derivations) {
  Instance inst = build_instance(cfg);
  long W = default_window(inst, cfg.window);
  ClosureResult res = compute_closure(inst.seq, W, cfg.pad, cfg.jobs);
  if (cfg.use_json) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["sequence"] = sequence_json(inst);
    out["window"] = res.window;
    out["pad"] = res.pad;
    out["safe_window"] = res.safe_window;
    out["overflow_count"] = res.overflow_count;
    out["safe_closed"] = res.safe_closed;
    json forms = json::array();
    auto emit = [&](size_t i) {
      json f;
      f["text"] = res.forms[i].str();
      f["terms"] = form_json(res.forms[i]);
      f["safe"] = res.forms[i].max_row() <= res.safe_window;
      if (derivations) {
        f["seed"] = res.seed_position[i];
        f["word"] = res.words[i];
      }
      forms.push_back(std::move(f));
    };
    if (full)
      for (size_t i = 0; i < res.forms.size(); ++i) emit(i);
    else
      for (size_t i : res.safe) emit(i);
    out["forms"] = std::move(forms);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "# " << inst.cartan.type_name() << " closure window=" << res.window
            << " pad=" << res.pad << " safe_window=" << res.safe_window << "\n";
  std::cout << "# forms=" << res.forms.size() << " safe=" << res.safe.size()
            << " overflow=" << res.overflow_count << " safe_closed="
            << (res.safe_closed ? "yes" : "no") << "\n";
  auto emit = [&](size_t i) {
    std::cout << res.forms[i].str();
    if (derivations) std::cout << "   <- " << word_text(res.words[i], res.seed_position[i]);
    std::cout << "\n";
  };
  if (full)
    for (size_t i = 0; i < res.forms.size(); ++i) emit(i);
  else
    for (size_t i : res.safe) emit(i);
  return 0;
}

// ----------------------------------------------------------- positivity ----

int cmd_positivity(Config cfg) {
  Instance inst = build_instance(cfg);
  long W = default_window(inst, cfg.window);
  ClosureResult res = compute_closure(inst.seq, W, cfg.pad, cfg.jobs);
  auto witness = check_positivity(res);
  if (cfg.use_json) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["sequence"] = sequence_json(inst);
    out["window"] = res.window;
    out["forms"] = res.forms.size();
    out["pass"] = !witness.has_value();
    if (witness) {
      json w;
      w["form"] = witness->form.str();
      w["form_positions"] = witness->form.str_positions(inst.seq);
      w["column"] = witness->column;
      w["seed"] = witness->seed_position;
      w["word"] = witness->word;
      w["word_text"] = word_text(witness->word, witness->seed_position);
      out["witness"] = std::move(w);
    }
    std::cout << out.dump(2) << "\n";
    return witness ? 1 : 0;
  }
  if (!witness) {
    std::cout << "POSITIVITY PASS (" << res.forms.size() << " forms, window " << res.window
              << ")\n";
    return 0;
  }
  std::cout << "POSITIVITY FAIL\n";
  std::cout << "witness: " << witness->form.str_positions(inst.seq) << "   (column "
            << witness->column << ")\n";
  std::cout << "double-index: " << witness->form.str() << "\n";
  std::cout << "derivation: " << word_text(witness->word, witness->seed_position) << "\n";
  return 1;
}

// ------------------------------------------------------------- equality ----

int cmd_equality(Config cfg) {
  Instance inst = build_instance(cfg);
  need_adapted(inst);
  long W = default_window(inst, cfg.window);
  TabComparison cmp = compare_with_tableaux(inst.seq, W, cfg.pad, cfg.jobs);
  if (cfg.use_json) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["sequence"] = sequence_json(inst);
    out["window"] = W;
    out["safe_window"] = cmp.safe_window;
    out["equal"] = cmp.equal;
    json mc = json::array(), mt = json::array();
    for (const auto& f : cmp.missing_from_closure) mc.push_back(f.str());
    for (const auto& f : cmp.missing_from_tab) mt.push_back(f.str());
    out["missing_from_closure"] = std::move(mc);
    out["missing_from_tab"] = std::move(mt);
    std::cout << out.dump(2) << "\n";
    return cmp.equal ? 0 : 1;
  }
  std::cout << "# " << inst.cartan.type_name() << " window=" << W
            << " safe_window=" << cmp.safe_window << "\n";
  if (cmp.equal) {
    std::cout << "EQUALITY PASS\n";
    return 0;
  }
  std::cout << "EQUALITY FAIL\n";
  if (!cmp.missing_from_closure.empty())
    std::cout << "missing from closure: " << cmp.missing_from_closure.front().str() << " (and "
              << (cmp.missing_from_closure.size() - 1) << " more)\n";
  if (!cmp.missing_from_tab.empty())
    std::cout << "missing from columns: " << cmp.missing_from_tab.front().str() << " (and "
              << (cmp.missing_from_tab.size() - 1) << " more)\n";
  return 1;
}

// ----------------------------------------------------------------- cone ----

int cmd_cone(Config cfg, bool raw) {
  Instance inst = build_instance(cfg);
  const AdaptedSequence& a = need_adapted(inst);
  InequalitySystem sys = raw ? build_cone_raw(a) : build_cone(a);
  if (cfg.use_json) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["sequence"] = sequence_json(inst);
    out["raw"] = raw;
    out["row_cap"] = sys.row_cap;
    json cons = json::array();
    for (size_t i = 0; i < sys.constraints.size(); ++i) {
      json c;
      c["text"] = sys.constraints[i].str() + " >= 0";
      c["terms"] = form_json(sys.constraints[i]);
      c["tableau"] = sys.provenance[i];
      cons.push_back(std::move(c));
    }
    out["constraints"] = std::move(cons);
    json zeros = json::array();
    for (const auto& v : sys.zero_vars) zeros.push_back({{"s", v.s}, {"j", v.j}});
    out["zero_vars"] = std::move(zeros);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "# " << inst.cartan.type_name() << " period (" << csv_of(inst.seq.period())
            << "), " << (raw ? "raw" : "simplified") << " system, "
            << sys.constraints.size() << " constraints\n";
  for (const auto& f : sys.constraints) std::cout << f.str() << " >= 0\n";
  for (const auto& v : sys.zero_vars) std::cout << "x[" << v.s << "," << v.j << "] = 0\n";
  std::cout << "x[m,i] = 0 for m > " << sys.row_cap << "\n";
  return 0;
}

// ------------------------------------------------------- crystal-verify ----

std::string weight_text(const RootWeight& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.c.size(); ++i) {
    if (i) os << ",";
    os << w.c[i];
  }
  os << ")";
  return os.str();
}

std::string point_text(const CrystalPoint& p) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, val] : p.entries()) {
    if (!first) os << " ";
    first = false;
    os << "x[" << v.s << "," << v.j << "]=" << val;
  }
  return os.str();
}

int cmd_crystal_verify(Config cfg, int depth, const std::string& dot_path) {
  Instance inst = build_instance(cfg);
  const AdaptedSequence& a = need_adapted(inst);
  BinftyResult gen = generate_binfty(a.sequence(), depth);
  InequalitySystem sys = build_cone(a);

  std::map<RootWeight, long long> counts;
  bool members_ok = true;
  std::string bad_point;
  for (const auto& p : gen.points) {
    counts[root_weight(inst.cartan, p)] += 1;
    if (members_ok && !member(sys, p)) {
      members_ok = false;
      bad_point = point_text(p);
    }
  }
  bool counts_ok = true;
  json weights = json::array();
  std::vector<std::string> lines;
  for (const auto& [mu, generated] : counts) {
    long long cone_count = (long long)enumerate_points(sys, mu).size();
    long long k = (long long)kostant(inst.cartan, mu);
    bool ok = generated == cone_count && cone_count == k;
    counts_ok = counts_ok && ok;
    if (cfg.use_json) {
      json w;
      w["mu"] = mu.c;
      w["generated"] = generated;
      w["cone"] = cone_count;
      w["kostant"] = k;
      w["ok"] = ok;
      weights.push_back(std::move(w));
    } else {
      std::ostringstream os;
      os << "mu=" << weight_text(mu) << " generated=" << generated << " cone=" << cone_count
         << " kostant=" << k << (ok ? "" : "   MISMATCH");
      lines.push_back(os.str());
    }
  }
  bool pass = members_ok && counts_ok;

  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw std::invalid_argument("cannot write " + dot_path);
    dot << "digraph binfty {\n";
    for (size_t i = 0; i < gen.points.size(); ++i)
      dot << "  n" << i << " [label=\"" << point_text(gen.points[i]) << "\"];\n";
    for (const auto& [from, letter, to] : gen.edges)
      dot << "  n" << from << " -> n" << to << " [label=\"" << letter << "\"];\n";
    dot << "}\n";
  }

  if (cfg.use_json) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["sequence"] = sequence_json(inst);
    out["depth"] = depth;
    out["points"] = gen.points.size();
    out["members_ok"] = members_ok;
    if (!members_ok) out["bad_point"] = bad_point;
    out["counts_ok"] = counts_ok;
    out["weights"] = std::move(weights);
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
    return pass ? 0 : 1;
  }
  std::cout << "# " << inst.cartan.type_name() << " depth=" << depth
            << " points=" << gen.points.size() << "\n";
  for (const auto& line : lines) std::cout << line << "\n";
  if (!members_ok) std::cout << "MEMBERSHIP FAIL: " << bad_point << "\n";
  std::cout << (pass ? "CRYSTAL-VERIFY PASS" : "CRYSTAL-VERIFY FAIL") << "\n";
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- apply ----

int cmd_apply(Config cfg, long seed, const std::string& word_csv) {
  Instance inst = build_instance(cfg);
  if (seed < 1) throw std::invalid_argument("--seed must be a position >= 1");
  std::vector<int> word;
  if (!word_csv.empty()) word = parse_csv_ints(word_csv, "--word");
  auto [s0, j0] = inst.seq.occurrence(seed);
  LinearForm f = LinearForm::unit(s0, j0);
  std::vector<std::string> steps{f.str()};
  for (int k : word) {
    if (k < 1) throw std::invalid_argument("--word positions must be >= 1");
    f = apply_s_at(inst.seq, k, f);
    steps.push_back(f.str());
  }
  if (cfg.use_json) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["sequence"] = sequence_json(inst);
    out["seed"] = seed;
    out["word"] = word;
    out["steps"] = steps;
    out["result"] = f.str();
    out["result_positions"] = f.str_positions(inst.seq);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "seed: x[" << seed << "]\n";
  for (size_t i = 1; i < steps.size(); ++i)
    std::cout << "S[" << word[i - 1] << "] -> " << steps[i] << "\n";
  std::cout << "result: " << f.str() << "\n";
  std::cout << "positions: " << f.str_positions(inst.seq) << "\n";
  return 0;
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--type", cfg.type, "Cartan type, e.g. A3, C2")->required();
  sub->add_option("--p", cfg.p_bits,
                  "orientation bits as i,j=0|1 tokens covering every Dynkin edge");
  sub->add_option("--period", cfg.period_csv, "periodic index word, e.g. 2,1,3");
  sub->add_option("--prefix", cfg.prefix_csv, "finite prefix before the period");
  sub->add_flag("--json", cfg.use_json, "machine-readable output");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyhedral realization toolkit"};
  app.require_subcommand(1);

  Config cfg;
  long rows = -1, base_rows = -1;
  bool expand = false, full = false, derivations = false, raw = false;
  int depth = 6;
  long seed = 1;
  std::string word_csv, dot_path;

  auto* tab = app.add_subcommand("tab", "list admissible columns");
  add_common(tab, cfg);
  tab->add_option("--rows", rows, "support window bound (default rank+5)");
  tab->add_option("--base-rows", base_rows, "enumerate by base row s <= bound instead");
  tab->add_flag("--expand", expand, "print expansions");

  auto* closure = app.add_subcommand("closure", "compute the truncated closure");
  add_common(closure, cfg);
  closure->add_option("--window", cfg.window, "operator row window W (default rank+5)");
  closure->add_option("--pad", cfg.pad, "escape margin above W (default rank+2)");
  closure->add_option("--jobs", cfg.jobs, "worker threads");
  closure->add_flag("--full", full, "print padded forms too, not only the safe slice");
  closure->add_flag("--derivations", derivations, "print seed and operator word per form");

  auto* positivity = app.add_subcommand("positivity", "check first-row nonnegativity");
  add_common(positivity, cfg);
  positivity->add_option("--window", cfg.window, "operator row window W (default rank+5)");
  positivity->add_option("--pad", cfg.pad, "escape margin above W");
  positivity->add_option("--jobs", cfg.jobs, "worker threads");

  auto* equality = app.add_subcommand("equality", "compare closure against column expansions");
  add_common(equality, cfg);
  equality->add_option("--window", cfg.window, "operator row window W (default rank+5)");
  equality->add_option("--pad", cfg.pad, "escape margin above W");
  equality->add_option("--jobs", cfg.jobs, "worker threads");

  auto* cone = app.add_subcommand("cone", "print the inequality system");
  add_common(cone, cfg);
  cone->add_flag("--raw", raw, "print the unsimplified system");

  auto* crystal = app.add_subcommand("crystal-verify", "cross-check generation, cone, counts");
  add_common(crystal, cfg);
  crystal->add_option("--depth", depth, "generation depth (default 6)");
  crystal->add_option("--dot", dot_path, "write the crystal graph in DOT format");

  auto* apply = app.add_subcommand("apply", "apply an operator word to a seed form");
  add_common(apply, cfg);
  apply->add_option("--seed", seed, "seed position k (form x[k])")->required();
  apply->add_option("--word", word_csv, "operator positions, applied left to right");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (tab->parsed()) return cmd_tab(cfg, rows, base_rows, expand);
    if (closure->parsed()) return cmd_closure(cfg, full, derivations);
    if (positivity->parsed()) return cmd_positivity(cfg);
    if (equality->parsed()) return cmd_equality(cfg);
    if (cone->parsed()) return cmd_cone(cfg, raw);
    if (crystal->parsed()) return cmd_crystal_verify(cfg, depth, dot_path);
    if (apply->parsed()) return cmd_apply(cfg, seed, word_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
