#include "mmc/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mmc/braid.hpp"
#include "mmc/cyclotomic.hpp"
#include "mmc/dense.hpp"
#include "mmc/errors.hpp"
#include "mmc/fusion.hpp"
#include "mmc/group_rep.hpp"
#include "mmc/invariants.hpp"
#include "mmc/ising.hpp"
#include "mmc/qudit.hpp"
#include "mmc/rational.hpp"
#include "mmc/seifert.hpp"
#include "mmc/tableau.hpp"

namespace mmc {
namespace {

using nlohmann::ordered_json;

// Round to 12 significant digits and re-read, so the JSON writer emits a
// stable short decimal for the rounded value.
double sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

ordered_json approx_json(std::complex<double> v) {
  return ordered_json{{"re", sig12(v.real())}, {"im", sig12(v.imag())}};
}

// The standard shape for an exact scalar: canonical cyclotomic coordinates
// plus a float evaluation and its modulus.
ordered_json value_json(const Cyclotomic& v) {
  ordered_json coeffs = ordered_json::array();
  for (const Rational& c : v.coefficients()) coeffs.push_back(c.to_string());
  const std::complex<double> x = v.eval();
  return ordered_json{
      {"exact", ordered_json{{"order", v.order()}, {"coeffs", coeffs}, {"scale", "1"}}},
      {"approx", approx_json(x)},
      {"norm", sig12(std::abs(x))}};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

LinkingMatrix parse_linking_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_object() || !doc.contains("components") || !doc.contains("linking"))
    throw std::invalid_argument("linking file must be {\"components\": c, \"linking\": [[...]]}");
  LinkingMatrix lk;
  lk.components = doc.at("components").get<int>();
  lk.entries = doc.at("linking").get<std::vector<std::vector<std::int64_t>>>();
  return lk;
}

CouplingMatrix parse_coupling_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_object() || !doc.contains("N") || !doc.contains("J"))
    throw std::invalid_argument("coupling file must be {\"N\": n, \"J\": [[...]]}");
  CouplingMatrix j;
  j.n = doc.at("N").get<int>();
  j.j = doc.at("J").get<std::vector<std::vector<std::int64_t>>>();
  j.validate();
  return j;
}

// Observable text: factors separated by '*' or whitespace, each X<i>, Z<i>,
// or U<i> with an optional integer exponent `^e`.
QuditMonomial parse_observable(const std::string& text, int n, int m) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == '*') c = ' ';
  std::istringstream in(spaced);
  QuditMonomial acc = QuditMonomial::identity(n, m);
  std::string token;
  bool any = false;
  while (in >> token) {
    any = true;
    const char kind = static_cast<char>(std::toupper(token[0]));
    std::size_t caret = token.find('^');
    const std::string index_text = token.substr(1, caret == std::string::npos
                                                       ? std::string::npos
                                                       : caret - 1);
    int site = 0;
    int exp = 1;
    try {
      site = std::stoi(index_text);
      if (caret != std::string::npos) exp = std::stoi(token.substr(caret + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad observable factor: " + token);
    }
    QuditMonomial base;
    if (kind == 'X')
      base = QuditMonomial::x(n, m, site);
    else if (kind == 'Z')
      base = QuditMonomial::z(n, m, site);
    else if (kind == 'U')
      base = QuditMonomial::u_op(n, m, site);
    else
      throw std::invalid_argument("bad observable factor: " + token);
    if (exp < 0) {
      base = monomial_inverse(base);
      exp = -exp;
    }
    for (int k = 0; k < exp; ++k) acc = monomial_multiply(acc, base);
  }
  if (!any) throw std::invalid_argument("empty observable");
  return acc;
}

int emit(std::ostream& out, const ordered_json& doc) {
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_fusion(std::ostream& out, int m, const std::vector<std::string>& fuse) {
  FusionRing ring(m);
  if (!fuse.empty()) {
    const Label a = Label::parse(fuse[0]);
    const Label b = Label::parse(fuse[1]);
    ordered_json result = ordered_json::array();
    for (const Label& c : ring.fuse(a, b)) result.push_back(c.to_string());
    return emit(out, ordered_json{{"result", result}});
  }
  ordered_json labels = ordered_json::array();
  for (const Label& a : ring.labels()) {
    const CategoryDatum data = ring.category_data(a);
    std::string qdim_exact;
    switch (data.qdim_kind) {
      case CategoryDatum::QDimKind::One: qdim_exact = "1"; break;
      case CategoryDatum::QDimKind::Two: qdim_exact = "2"; break;
      case CategoryDatum::QDimKind::SqrtM: qdim_exact = "sqrt(" + std::to_string(m) + ")"; break;
    }
    labels.push_back(ordered_json{
        {"label", a.to_string()},
        {"qdim", ordered_json{{"exact", qdim_exact}, {"approx", sig12(data.qdim)}}},
        {"twist", ordered_json{{"exact", data.h.to_string()},
                               {"approx", sig12(data.h.to_double())}}}});
  }
  return emit(out, ordered_json{{"m", m}, {"rank", ring.rank()}, {"labels", labels}});
}

int cmd_braid_info(std::ostream& out, const std::string& closure, const std::string& path) {
  const BraidWord word = parse_braid(read_file(path));
  const ClosureKind kind = closure == "plat" ? ClosureKind::Plat : ClosureKind::Trace;
  const ComponentPartition parts = closure_components(word, kind);
  const LinkingMatrix lk = linking_matrix(word, kind);
  return emit(out, ordered_json{{"strands", word.strands},
                                {"length", word.letters.size()},
                                {"closure", closure},
                                {"permutation", braid_permutation(word)},
                                {"components", parts.count},
                                {"strand_component", parts.strand_component},
                                {"linking", lk.entries}});
}

int cmd_invariant(std::ostream& out, const std::string& kind, int m,
                  const std::string& mode, const std::string& path) {
  if (kind == "lm") {
    const LinkingMatrix lk = parse_linking_json(read_file(path));
    const StateSumResult res = lm_state_sum(lk, m);
    return emit(out, ordered_json{{"kind", "lm"},
                                  {"m", m},
                                  {"components", lk.components},
                                  {"E", value_json(res.e)},
                                  {"I_Y1", value_json(res.i_y1)}});
  }
  const BraidWord word = parse_braid(read_file(path));
  const SeifertData data = seifert_from_braid(word);
  const GaussSumMode gauss = mode == "brute" ? GaussSumMode::Brute : GaussSumMode::Fast;
  const GaussSumValue value = i_xe_eval(data, m, gauss);
  return emit(out, ordered_json{{"kind", "xe"},
                                {"p", m},
                                {"mode", mode},
                                {"b1", data.b1},
                                {"components", data.components},
                                {"corank", value.corank},
                                {"value", value_json(value.value)}});
}

ordered_json matrix_json(const Eigen::MatrixXcd& a) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(approx_json(a(r, c)));
    rows.push_back(row);
  }
  return rows;
}

int cmd_simulate_dense(std::ostream& out, int m, const std::string& anyon,
                       const BraidWord& word) {
  RMatrixKind kind;
  if (anyon == "gaussian")
    kind = RMatrixKind::gaussian_xe(m);
  else if (anyon == "potts")
    kind = RMatrixKind::potts(m);
  else if (anyon == "y1")
    kind = RMatrixKind::y1(m);
  else
    kind = RMatrixKind::ising_bell();
  const DenseOperator rho = represent_braid(word, kind);
  return emit(out, ordered_json{{"engine", "dense"},
                                {"anyon", anyon},
                                {"m", m},
                                {"strands", word.strands},
                                {"dim", rho.rows()},
                                {"matrix", matrix_json(rho)}});
}

int cmd_simulate_heisenberg(std::ostream& out, int m, const BraidWord& word,
                            const std::string& measure, int shots, std::uint64_t seed) {
  const int n = word.strands;
  ordered_json pullbacks = ordered_json::array();
  for (int i = 1; i + 1 <= n; ++i) {
    const QuditMonomial img = conjugate_by_word(QuditMonomial::u_op(n, m, i), word);
    pullbacks.push_back(ordered_json{{"i", i},
                                     {"phase_exp", img.phase_exp},
                                     {"z", img.z_exp},
                                     {"x", img.x_exp}});
  }
  ordered_json doc{{"engine", "heisenberg"}, {"m", m}, {"strands", n},
                   {"u_pullbacks", pullbacks}};
  if (!measure.empty()) {
    StabilizerTableau t;
    t.n = n;
    t.m = m;
    for (int site = 1; site <= n; ++site)
      t.rows.push_back({QuditMonomial::z(n, m, site), 0});
    const StabilizerTableau evolved = evolve_tableau(t, word);
    const QuditMonomial obs = parse_observable(measure, n, m);
    std::map<int, std::int64_t> counts;
    for (int shot = 0; shot < shots; ++shot) {
      const std::uint64_t shot_seed =
          seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(shot + 1);
      ++counts[measure_monomial(evolved, obs, shot_seed).outcome_exp];
    }
    ordered_json outcomes;
    for (const auto& [value, count] : counts) outcomes[std::to_string(value)] = count;
    doc["measure"] = ordered_json{{"observable", measure},
                                  {"shots", shots},
                                  {"seed", seed},
                                  {"outcomes", outcomes}};
  }
  return emit(out, doc);
}

ordered_json pauli_list_json(const std::vector<PauliWord>& words) {
  ordered_json list = ordered_json::array();
  for (const PauliWord& w : words) list.push_back(format_pauli(w));
  return list;
}

int cmd_simulate_group(std::ostream& out, int m, const BraidWord& word) {
  const GroupElement g = braid_to_element(word, m);
  ordered_json exps = ordered_json::array();
  for (const auto& [interval, e] : g.a.exps)
    exps.push_back(ordered_json{{"k", interval.first}, {"l", interval.second}, {"e", e}});
  const bool identity = g.a.is_identity() && g.c == CliffordElement::identity(g.q());
  return emit(out, ordered_json{
                       {"engine", "group"},
                       {"m", m},
                       {"strands", word.strands},
                       {"qubits", g.q()},
                       {"is_identity", identity},
                       {"abelian", ordered_json{{"sign", g.a.sign}, {"exps", exps}}},
                       {"clifford", ordered_json{{"x_images", pauli_list_json(g.c.x_fwd)},
                                                 {"z_images", pauli_list_json(g.c.z_fwd)}}}});
}

int cmd_compile_ising(std::ostream& out, int m, int d, const std::string& path) {
  const CouplingMatrix j = parse_coupling_json(read_file(path));
  IsingParams params;
  params.m = m;
  params.d = d;
  const CompiledLink link = compile_link(j, params);
  ordered_json fmap = ordered_json::array();
  for (const auto& triple : link.fmap)
    fmap.push_back(ordered_json::array({triple[0], triple[1], triple[2]}));
  const auto y_exact = params.exact_y();
  return emit(out, ordered_json{
                       {"components", link.lk.components},
                       {"linking", link.lk.entries},
                       {"braid", format_braid(link.braid)},
                       {"fmap", fmap},
                       {"y", ordered_json{{"exact", y_exact ? ordered_json(y_exact->to_string())
                                                            : ordered_json(nullptr)},
                                          {"approx", sig12(params.y())}}}});
}

int cmd_maxcut(std::ostream& out, int m, int d, const std::string& path) {
  const CouplingMatrix g = parse_coupling_json(read_file(path));
  IsingParams params;
  params.m = m;
  params.d = d;
  const MaxcutResult r = maxcut_recover(g, params);
  ordered_json z{{"exact", nullptr}, {"approx", sig12(r.z)}};
  if (const auto y_exact = params.exact_y()) {
    CouplingMatrix strong = g;
    for (auto& row : strong.j)
      for (auto& v : row) v *= r.k;
    try {
      z["exact"] = z_partition_exact(strong, *y_exact).to_string();
    } catch (const std::overflow_error&) {
      // leave null: the exact value does not fit 64-bit rationals
    }
  }
  return emit(out, ordered_json{
                       {"max_cut", r.stats.max_cut},
                       {"count", r.stats.count},
                       {"k", r.k},
                       {"z", z},
                       {"recovered", ordered_json{{"max_cut", r.recovered.max_cut},
                                                  {"count", r.recovered.count}}},
                       {"match", r.recovered == r.stats}});
}

int cmd_verify_claims(std::ostream& out, int trials, std::uint64_t seed) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ 0x9e3779b9u));
  std::uniform_int_distribution<int> size(1, 3);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> level(0, 1);
  double max_residual = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int n = size(rng);
    CouplingMatrix j;
    j.n = n;
    j.j.assign(n, std::vector<std::int64_t>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) j.j[a][b] = j.j[b][a] = entry(rng);
    IsingParams params;
    params.m = level(rng) == 0 ? 3 : 5;
    params.d = 1 + t % (params.m - 1);
    max_residual = std::max(max_residual, verify_claim(j, params));
  }
  const bool claims_pass = max_residual < 1e-9;

  // Partition-value bounds and cut recovery for every graph on <= 4 vertices
  // in one negative and two positive coupling regimes.
  int graphs = 0;
  bool bounds_pass = true;
  const std::vector<std::pair<int, int>> regimes = {{3, 1}, {5, 1}, {5, 2}};
  for (int n = 1; n <= 4 && bounds_pass; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()) && bounds_pass; ++mask) {
      CouplingMatrix g;
      g.n = n;
      g.j.assign(n, std::vector<std::int64_t>(n, 0));
      std::int64_t edges = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1) {
          g.j[slots[s].first][slots[s].second] = 1;
          g.j[slots[s].second][slots[s].first] = 1;
          ++edges;
        }
      for (const auto& [m, d] : regimes) {
        IsingParams params;
        params.m = m;
        params.d = d;
        const MaxcutResult r = maxcut_recover(g, params);
        const double w = std::abs(params.y());
        const double main_term =
            static_cast<double>(r.stats.count) *
            std::pow(w, static_cast<double>(r.k) *
                            static_cast<double>(edges - r.stats.max_cut));
        const double tail = std::pow(w, static_cast<double>(r.k) *
                                            static_cast<double>(1 + edges - r.stats.max_cut)) *
                            std::ldexp(1.0, n);
        if (!(r.recovered == r.stats) || r.z < main_term * (1.0 - 1e-9) ||
            r.z > (main_term + tail) * (1.0 + 1e-9)) {
          bounds_pass = false;
          break;
        }
        ++graphs;
      }
    }
  }
  const bool pass = claims_pass && bounds_pass;
  emit(out, ordered_json{{"suite", "claims"},
                         {"claim_instances", trials},
                         {"max_residual", sig12(max_residual)},
                         {"tolerance", 1e-9},
                         {"recovery_checks", graphs},
                         {"pass", pass}});
  return pass ? 0 : 1;
}

int cmd_verify_sign(std::ostream& out, int trials, std::uint64_t seed) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ 0x51f15e3du));
  std::uniform_int_distribution<int> size(2, 10);
  std::uniform_int_distribution<int> coin(0, 1);
  IsingParams params;
  params.m = 3;
  params.d = 1;  // y = -1/2 exactly
  int mismatches = 0;
  for (int t = 0; t < trials; ++t) {
    const int n = size(rng);
    CouplingMatrix j;
    j.n = n;
    j.j.assign(n, std::vector<std::int64_t>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) j.j[a][b] = j.j[b][a] = coin(rng);
    const SignRegimeResult got = sign_regime(j, params);
    const Rational exact = z_partition_exact(j, Rational(-1, 2));
    const int want = exact.is_zero() ? 0 : (exact.num() > 0 ? 1 : -1);
    const int from_double = got.z > 0.0 ? 1 : (got.z < 0.0 ? -1 : 0);
    if (got.sign != want || from_double != want) ++mismatches;
  }
  const bool pass = mismatches == 0;
  emit(out, ordered_json{{"suite", "sign"},
                         {"instances", trials},
                         {"mismatches", mismatches},
                         {"pass", pass}});
  return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact fusion, braiding, link-invariant, and Ising-compiler toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int threads = 1;
  app.add_option("--seed", seed, "seed for measurement sampling and fuzz suites");
  app.add_option("--threads", threads, "cap on internal parallelism")
      ->check(CLI::Range(1, 256));

  auto* fusion = app.add_subcommand("fusion", "fusion ring of the level-m theory");
  int fusion_m = 0;
  std::vector<std::string> fuse_labels;
  fusion->add_option("--m", fusion_m, "odd level m >= 3")->required();
  fusion->add_option("--fuse", fuse_labels, "two labels to fuse")->expected(2);

  auto* braid_info = app.add_subcommand("braid-info", "closure data of a braid word");
  std::string closure = "trace";
  std::string braid_path;
  braid_info->add_option("--closure", closure, "closure kind")
      ->check(CLI::IsMember({"trace", "plat"}));
  braid_info->add_option("file", braid_path, "braid file (n=<strands> then letters)")
      ->required();

  auto* invariant = app.add_subcommand("invariant", "exact link invariants");
  std::string inv_kind;
  int inv_m = 0;
  std::string inv_mode = "fast";
  std::string inv_path;
  invariant->add_option("--kind", inv_kind, "lm (linking file) or xe (braid file)")
      ->check(CLI::IsMember({"lm", "xe"}))
      ->required();
  invariant->add_option("--m", inv_m, "odd level m (odd prime p for xe)")->required();
  invariant->add_option("--mode", inv_mode, "xe evaluation mode")
      ->check(CLI::IsMember({"fast", "brute"}));
  invariant->add_option("file", inv_path, "input file")->required();

  auto* simulate = app.add_subcommand("simulate", "image of a braid word under an engine");
  std::string engine;
  int sim_m = 0;
  std::string anyon = "gaussian";
  std::string measure;
  int shots = 1000;
  std::string sim_path;
  simulate->add_option("--engine", engine, "dense, heisenberg, or group")
      ->check(CLI::IsMember({"dense", "heisenberg", "group"}))
      ->required();
  simulate->add_option("--m", sim_m, "odd level m >= 3")->required();
  simulate->add_option("--anyon", anyon, "dense-engine gate family")
      ->check(CLI::IsMember({"gaussian", "potts", "y1", "ising"}));
  simulate->add_option("--measure", measure,
                       "heisenberg engine: observable to sample, e.g. 'Z1' or 'X1*Z2^2'");
  simulate->add_option("--shots", shots, "heisenberg engine: sample count")
      ->check(CLI::Range(1, 1000000));
  simulate->add_option("file", sim_path, "braid file")->required();

  auto* compile = app.add_subcommand("compile-ising", "coupling matrix to plat link");
  int ising_m = 0, ising_d = 0;
  std::string ising_path;
  compile->add_option("--m", ising_m, "odd level m >= 3")->required();
  compile->add_option("--d", ising_d, "twist multiplicity d >= 1")->required();
  compile->add_option("file", ising_path, "coupling file {\"N\":..,\"J\":[[..]]}")
      ->required();

  auto* maxcut = app.add_subcommand("maxcut", "max-cut statistics via the partition function");
  int cut_m = 0, cut_d = 0;
  std::string cut_path;
  maxcut->add_option("--m", cut_m, "odd level m >= 3")->required();
  maxcut->add_option("--d", cut_d, "twist multiplicity with |y| < 1")->required();
  maxcut->add_option("file", cut_path, "0/1 adjacency file {\"N\":..,\"J\":[[..]]}")
      ->required();

  auto* verify = app.add_subcommand("verify", "self-checking fuzz suites");
  std::string suite;
  int trials = 0;
  verify->add_option("--suite", suite, "claims or sign")
      ->check(CLI::IsMember({"claims", "sign"}))
      ->required();
  verify->add_option("--trials", trials, "instance count (default per suite)")
      ->check(CLI::Range(1, 100000));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("mmc");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (fusion->parsed()) return cmd_fusion(out, fusion_m, fuse_labels);
    if (braid_info->parsed()) return cmd_braid_info(out, closure, braid_path);
    if (invariant->parsed()) return cmd_invariant(out, inv_kind, inv_m, inv_mode, inv_path);
    if (simulate->parsed()) {
      const BraidWord word = parse_braid(read_file(sim_path));
      if (engine == "dense") return cmd_simulate_dense(out, sim_m, anyon, word);
      if (engine == "heisenberg")
        return cmd_simulate_heisenberg(out, sim_m, word, measure, shots, seed);
      return cmd_simulate_group(out, sim_m, word);
    }
    if (compile->parsed()) return cmd_compile_ising(out, ising_m, ising_d, ising_path);
    if (maxcut->parsed()) return cmd_maxcut(out, cut_m, cut_d, cut_path);
    if (verify->parsed()) {
      if (suite == "claims") return cmd_verify_claims(out, trials > 0 ? trials : 50, seed);
      return cmd_verify_sign(out, trials > 0 ? trials : 100, seed);
    }
    err << app.help();
    return 2;
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const refused_error& e) {
    err << "refused: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mmc
