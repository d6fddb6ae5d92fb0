#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "burnside/cache.hpp"
#include "burnside/cellsearch.hpp"
#include "burnside/decorated.hpp"
#include "burnside/parabolic.hpp"
#include "burnside/reference_tables.hpp"
#include "burnside/ring.hpp"
#include "json.hpp"

namespace {

using burnside::BurnsideRing;
using burnside::CharacterTable;
using burnside::CharacterTarget;
using burnside::DecorationFunctor;
using burnside::DiskCache;
using burnside::ExtendedMarkTable;
using burnside::FiniteGroup;
using burnside::FunctorSpec;
using burnside::Perm;
using burnside::RingElement;
using burnside::SubgroupClassification;

/// Thrown for bad user input; carries the input-error exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group = "S4";
  std::string generators;
  int degree = 0;
  std::string functor = "builtin-mu";
  std::string format = "text";
  std::string output;
  std::string cache_dir;
  int jobs = 1;
  std::uint64_t seed = 271828;

  std::string green_file;
  long long min_left_cell = 151;
  long long big_cell_threshold = 175;
  long long min_big_cells = 30;
  long long min_double_cell = 7400;

  std::string blocks_file;
  std::vector<std::string> exprs;
};

/// Group, classification, functor and ring with construction-order
/// dependencies kept alive in one place. Heap-allocated and never moved:
/// the later members hold pointers into the earlier ones.
struct Engine {
  FiniteGroup G;
  SubgroupClassification cls;
  FunctorSpec spec;
  DecorationFunctor fun;
  BurnsideRing ring;

  Engine(FiniteGroup g, FunctorSpec s)
      : G(std::move(g)),
        cls(SubgroupClassification::classify(G, burnside::all_subgroups(G))),
        spec(std::move(s)),
        fun(G, cls, spec),
        ring(G, cls, fun) {}
};

[[nodiscard]] FiniteGroup make_group(const Options& o) {
  if (!o.generators.empty()) {
    if (o.degree < 1) throw InputError("--generators requires --degree");
    std::vector<Perm> gens;
    std::stringstream ss(o.generators);
    std::string tok;
    while (std::getline(ss, tok, ';'))
      if (!tok.empty()) gens.push_back(Perm::from_cycles(tok, o.degree));
    if (gens.empty()) throw InputError("--generators is empty");
    return FiniteGroup::generate(gens, o.degree);
  }
  if (o.group.size() == 2 && o.group[0] == 'S' && o.group[1] >= '1' && o.group[1] <= '6')
    return FiniteGroup::symmetric(o.group[1] - '0');
  throw InputError("unknown group label " + o.group + " (expected S1..S6, or use --generators)");
}

[[nodiscard]] FunctorSpec make_spec(const Options& o) {
  if (o.functor == "builtin-mu") return FunctorSpec::builtin_mu(o.group);
  if (o.functor == "trivial") return FunctorSpec::builtin_trivial(o.group);
  return FunctorSpec::load(o.functor);
}

[[nodiscard]] std::string group_key(const Options& o) {
  return o.generators.empty() ? o.group : "deg" + std::to_string(o.degree) + ";" + o.generators;
}

[[nodiscard]] std::unique_ptr<Engine> make_engine(const Options& o) {
  return std::make_unique<Engine>(make_group(o), make_spec(o));
}

/// Construction or axiom violations in the bound functor are input errors
/// for every command except verify, which reports them as failed checks.
void require_valid(const DecorationFunctor& fun) {
  const auto violations = fun.validate();
  if (violations.empty()) return;
  std::string msg = "functor spec violates its axioms:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw InputError(msg);
}

int emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + o.output);
  out << text;
  return 0;
}

[[nodiscard]] std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// ---------------------------------------------------------------- marks --

[[nodiscard]] ExtendedMarkTable table_from_json(const nlohmann::json& j) {
  ExtendedMarkTable t;
  t.row_labels = j.at("rows").get<std::vector<std::string>>();
  t.column_labels = j.at("columns").get<std::vector<std::string>>();
  t.marks = j.at("marks").get<std::vector<std::vector<long long>>>();
  t.orbit_counts = j.at("orbit_counts").get<std::vector<long long>>();
  if (t.marks.size() != t.row_labels.size() || t.orbit_counts.size() != t.row_labels.size())
    throw std::invalid_argument("mark table shape mismatch");
  for (const auto& row : t.marks)
    if (row.size() != t.column_labels.size()) throw std::invalid_argument("mark table shape mismatch");
  return t;
}

[[nodiscard]] std::string marks_text(const ExtendedMarkTable& t) {
  const auto width_of = [](long long v) { return std::to_string(v).size(); };
  std::size_t w0 = 0;
  for (const auto& r : t.row_labels) w0 = std::max(w0, r.size());
  std::vector<std::size_t> w(t.column_labels.size() + 1, 1);
  for (std::size_t j = 0; j < t.column_labels.size(); ++j) {
    w[j] = t.column_labels[j].size();
    for (const auto& row : t.marks) w[j] = std::max(w[j], width_of(row[j]));
  }
  for (std::size_t i = 0; i < t.orbit_counts.size(); ++i) w.back() = std::max(w.back(), width_of(t.orbit_counts[i]));

  std::ostringstream os;
  os << std::string(w0, ' ');
  for (std::size_t j = 0; j < t.column_labels.size(); ++j) os << ' ' << std::setw(static_cast<int>(w[j])) << t.column_labels[j];
  os << ' ' << std::setw(static_cast<int>(w.back())) << 'M' << '\n';
  for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
    os << std::left << std::setw(static_cast<int>(w0)) << t.row_labels[i] << std::right;
    for (std::size_t j = 0; j < t.column_labels.size(); ++j) os << ' ' << std::setw(static_cast<int>(w[j])) << t.marks[i][j];
    os << ' ' << std::setw(static_cast<int>(w.back())) << t.orbit_counts[i] << '\n';
  }
  return os.str();
}

int cmd_marks(const Options& o) {
  const FunctorSpec spec = make_spec(o);
  const DiskCache cache(o.cache_dir);
  const std::string key = "marks\n" + group_key(o) + "\n" + spec.to_json().dump();

  ExtendedMarkTable table;
  bool cached = false;
  if (const auto hit = cache.get(key)) {
    try {
      table = table_from_json(nlohmann::json::parse(*hit));
      cached = true;
    } catch (const std::exception&) {
      cached = false;  // torn entry: recompute
    }
  }
  if (!cached) {
    const auto eng = make_engine(o);
    require_valid(eng->fun);
    table = eng->ring.extended_table_of_marks();
    cache.put(key, table.to_json().dump());
  }

  if (o.format == "csv") return emit(o, table.to_csv());
  if (o.format == "json") return emit(o, table.to_json().dump(2) + "\n");
  return emit(o, marks_text(table));
}

// --------------------------------------------------------------- verify --

struct CheckLine {
  std::string name;
  bool pass;
  std::string detail;
};

int cmd_verify(const Options& o) {
  std::vector<CheckLine> checks;
  const auto check = [&checks](const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back({name, ok, ok ? "" : detail});
  };

  const auto eng = make_engine(o);
  const BurnsideRing& R = eng->ring;
  const int n = R.n_basis();

  const auto violations = eng->fun.validate();
  if (violations.empty()) {
    check("functor-spec validation", true);
  } else {
    for (const auto& v : violations) check("functor-spec validation", false, v);
  }

  if (violations.empty()) {
    std::mt19937_64 rng(o.seed);
    const auto e = [&R](int i) { return RingElement{{i, 1}}; };

    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = R.multiply(R.one(), e(i)) == e(i);
    check("identity element", ok);

    ok = true;
    for (int i = 0; i < n && ok; ++i) ok = R.dual(R.dual(e(i))) == e(i);
    check("dual is an involution", ok);

    ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i; j < n && ok; ++j) ok = R.dual(R.multiply(e(i), e(j))) == R.multiply(R.dual(e(i)), R.dual(e(j)));
    check("dual is a ring map", ok);

    ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) ok = R.multiply(e(i), e(j)) == R.multiply(e(j), e(i));
    check("product commutativity", ok);

    ok = true;
    if (n <= 16) {
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          for (int k = 0; k < n && ok; ++k)
            ok = R.multiply(R.multiply(e(i), e(j)), e(k)) == R.multiply(e(i), R.multiply(e(j), e(k)));
      check("product associativity (all triples)", ok);
    } else {
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int t = 0; t < 200 && ok; ++t) {
        const int i = pick(rng), j = pick(rng), k = pick(rng);
        ok = R.multiply(R.multiply(e(i), e(j)), e(k)) == R.multiply(e(i), R.multiply(e(j), e(k)));
      }
      check("product associativity (200 seeded triples)", ok);
    }

    ok = true;
    if (n <= 16) {
      for (int a = 0; a < R.classification().n_classes() && ok; ++a)
        for (int chi = 0; chi < R.functor().value(a).n_elements() && ok; ++chi)
          for (int i = 0; i < n && ok; ++i)
            for (int j = i; j < n && ok; ++j)
              ok = R.mark(a, chi, R.multiply(e(i), e(j))) == R.mark(a, chi, e(i)) * R.mark(a, chi, e(j));
      check("marks are ring homomorphisms (all pairs)", ok);
    } else {
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int t = 0; t < 60 && ok; ++t) {
        const int i = pick(rng), j = pick(rng);
        for (int a = 0; a < R.classification().n_classes() && ok; ++a)
          for (int chi = 0; chi < R.functor().value(a).n_elements() && ok; ++chi)
            ok = R.mark(a, chi, R.multiply(e(i), e(j))) == R.mark(a, chi, e(i)) * R.mark(a, chi, e(j));
      }
      check("marks are ring homomorphisms (60 seeded pairs)", ok);
    }

    const ExtendedMarkTable table = R.extended_table_of_marks();
    check("mark matrix nonsingular over Q", table.nonsingular());

    if (o.generators.empty() && (o.group == "S4" || o.group == "S5") && o.functor == "builtin-mu") {
      const auto& want = o.group == "S4" ? burnside::reference::s4_extended_marks() : burnside::reference::s5_extended_marks();
      const auto& labels = o.group == "S4" ? burnside::reference::s4_basis_labels() : burnside::reference::s5_basis_labels();
      ok = table.row_labels == labels && table.column_labels == labels && table.marks.size() == want.size();
      for (std::size_t i = 0; i < table.marks.size() && ok; ++i) {
        for (std::size_t j = 0; j < table.marks[i].size() && ok; ++j) ok = table.marks[i][j] == want[i][j];
        ok = ok && table.orbit_counts[i] == want[i].back();
      }
      check("published table reproduction", ok);
    }

    ok = true;
    std::string oracle_name;
    if (R.group().order() <= 24) {
      for (int i = 0; i < n && ok; ++i)
        for (int j = i; j < n && ok; ++j) {
          const auto X = burnside::from_basis(R, R.basis(i));
          const auto Y = burnside::from_basis(R, R.basis(j));
          ok = burnside::decompose(burnside::product_concrete(X, Y)) == R.multiply(e(i), e(j));
        }
      oracle_name = "concrete product oracle (all pairs)";
    } else {
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int t = 0; t < 50 && ok; ++t) {
        const int i = pick(rng), j = pick(rng);
        const auto X = burnside::from_basis(R, R.basis(i));
        const auto Y = burnside::from_basis(R, R.basis(j));
        ok = burnside::decompose(burnside::product_concrete(X, Y)) == R.multiply(e(i), e(j));
      }
      oracle_name = "concrete product oracle (50 seeded pairs)";
    }
    check(oracle_name, ok);
  }

  int failures = 0;
  for (const auto& c : checks) failures += c.pass ? 0 : 1;

  std::string out;
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out = nlohmann::json{{"checks", arr}, {"failures", failures}}.dump(2) + "\n";
  } else if (o.format == "csv") {
    out = "status,check\n";
    for (const auto& c : checks) out += std::string(c.pass ? "PASS" : "FAIL") + "," + csv_quote(c.name) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
    os << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
    out = os.str();
  }
  emit(o, out);
  return failures == 0 ? 0 : 1;
}

// ----------------------------------------------------------- cell-search --

int cmd_cell_search(const Options& o) {
  const auto eng = make_engine(o);
  require_valid(eng->fun);
  const BurnsideRing& R = eng->ring;

  CharacterTarget target{{42, 19, 10, 1, 0}};
  if (!o.green_file.empty()) target = burnside::target_from_green(burnside::GreenFile::load(o.green_file), R.group().degree());

  const auto solutions = burnside::solve_effective(R, target);
  const auto universe = burnside::enumerate_decorations(R);
  const burnside::SearchConstraints full{o.min_left_cell, o.big_cell_threshold, o.min_big_cells, o.min_double_cell};
  const auto candidates = burnside::filter_constraints(universe, {0, 0, 0, o.min_double_cell});
  const auto survivors = burnside::filter_constraints(universe, full);

  std::vector<std::pair<int, int>> pairs;
  std::string pair_error;
  try {
    pairs = burnside::pair_twins(R, survivors);
  } catch (const std::exception& e) {
    pair_error = e.what();
  }

  const burnside::PolynomialCheck poly = burnside::polynomial_cross_check(R, universe);

  if (o.format == "json") {
    nlohmann::json j;
    j["target"] = target.multiplicities;
    j["target_degree"] = target.degree(CharacterTable::symmetric(R.group().degree()));
    nlohmann::json sols = nlohmann::json::array();
    for (const auto& s : solutions) sols.push_back(R.to_string(s));
    j["solutions"] = sols;
    j["universe"] = universe.size();
    j["candidates"] = burnside::candidates_json(R, candidates);
    j["survivors"] = burnside::candidates_json(R, survivors);
    if (pair_error.empty()) {
      nlohmann::json tp = nlohmann::json::array();
      for (const auto& [a, b] : pairs)
        tp.push_back(nlohmann::json::array({R.to_string(survivors[a].element), R.to_string(survivors[b].element)}));
      j["twin_pairs"] = tp;
    } else {
      j["twin_error"] = pair_error;
    }
    j["polynomial"] = {{"points", universe.size()},
                       {"printed_matches", poly.printed_matches},
                       {"printed_mismatches", poly.printed_mismatches},
                       {"fitted_consistent", poly.fitted_consistent}};
    return emit(o, j.dump(2) + "\n");
  }

  if (o.format == "csv") {
    std::string out = "set,double_cell,left_cells\n";
    for (const auto& c : candidates)
      out += csv_quote(R.to_string(c.element)) + "," + std::to_string(c.double_cell) + "," +
             csv_quote(burnside::partition_exponent_string(c.partition)) + "\n";
    return emit(o, out);
  }

  std::ostringstream os;
  os << "target:";
  for (long long m : target.multiplicities) os << " " << m;
  os << " (degree " << target.degree(CharacterTable::symmetric(R.group().degree())) << ")\n";

  os << "\neffective solutions: " << solutions.size() << "\n";
  for (const auto& s : solutions) os << "  " << R.to_string(s) << "\n";

  os << "\ndecoration universe: " << universe.size() << " decorated sets\n";

  os << "\ncandidates with double cell >= " << o.min_double_cell << ": " << candidates.size() << "\n";
  os << burnside::candidates_text_table(R, candidates);

  os << "\nsurvivors of (left cells >= " << o.min_left_cell << ", at least " << o.min_big_cells << " cells >= "
     << o.big_cell_threshold << ", double cell >= " << o.min_double_cell << "): " << survivors.size() << "\n";
  os << burnside::candidates_text_table(R, survivors);

  if (pair_error.empty()) {
    os << "\ntwin pairs: " << pairs.size() << "\n";
    for (const auto& [a, b] : pairs)
      os << "  " << R.to_string(survivors[a].element) << "  <->  " << R.to_string(survivors[b].element) << "\n";
  } else {
    os << "\ntwin pairing failed: " << pair_error << "\n";
  }

  os << "\nclosed-form check: ";
  if (poly.printed_matches)
    os << "printed polynomial matches at all " << universe.size() << " points";
  else
    os << "printed polynomial disagrees at " << poly.printed_mismatches << " of " << universe.size() << " points";
  os << "; refitted quadratic " << (poly.fitted_consistent ? "matches everywhere" : "does not exist") << "\n";

  return emit(o, os.str());
}

// ------------------------------------------------------------- parabolic --

int cmd_parabolic(const Options& o) {
  const auto cfg = burnside::ParabolicConfig::load(o.blocks_file);
  const auto eng = make_engine(o);
  require_valid(eng->fun);
  const auto fams = burnside::parabolic_families(eng->ring, cfg);

  if (o.format == "json") return emit(o, burnside::parabolic_json(eng->ring, fams).dump(2) + "\n");
  if (o.format == "csv") {
    std::string out = "block,target,solutions\n";
    for (const auto& f : fams) {
      std::string tgt;
      for (long long m : f.target.multiplicities) tgt += (tgt.empty() ? "" : " ") + std::to_string(m);
      out += csv_quote(f.label) + "," + csv_quote(tgt) + "," + csv_quote(burnside::family_to_string(eng->ring, f, fams)) + "\n";
    }
    return emit(o, out);
  }
  return emit(o, burnside::parabolic_text_table(eng->ring, fams));
}

// --------------------------------------------------------- product/euler --

int cmd_product(const Options& o) {
  const auto eng = make_engine(o);
  require_valid(eng->fun);
  const BurnsideRing& R = eng->ring;
  RingElement acc = R.one();
  for (const auto& ex : o.exprs) acc = R.multiply(acc, R.parse(ex));

  if (o.format == "json") {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [i, c] : acc) coeffs[R.basis(i).label] = c;
    const nlohmann::json j{{"factors", o.exprs}, {"product", R.to_string(acc)}, {"coefficients", coeffs}};
    return emit(o, j.dump(2) + "\n");
  }
  if (o.format == "csv") {
    std::string out = "label,coefficient\n";
    for (const auto& [i, c] : acc) out += csv_quote(R.basis(i).label) + "," + std::to_string(c) + "\n";
    return emit(o, out);
  }
  return emit(o, R.to_string(acc) + "\n");
}

int cmd_euler(const Options& o) {
  const auto eng = make_engine(o);
  require_valid(eng->fun);
  const BurnsideRing& R = eng->ring;

  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& ex : o.exprs) arr.push_back({{"expression", ex}, {"orbits", R.euler(R.parse(ex))}});
    return emit(o, arr.dump(2) + "\n");
  }
  if (o.format == "csv") {
    std::string out = "expression,orbits\n";
    for (const auto& ex : o.exprs) out += csv_quote(ex) + "," + std::to_string(R.euler(R.parse(ex))) + "\n";
    return emit(o, out);
  }
  std::string out;
  for (const auto& ex : o.exprs) out += std::to_string(R.euler(R.parse(ex))) + "\n";
  return emit(o, out);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"exact engine for generalised Burnside rings of permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--group", o.group, "group label S1..S6")->capture_default_str();
  app.add_option("--generators", o.generators, "semicolon-separated cycles, e.g. \"(1,2);(1,2,3,4)\"");
  app.add_option("--degree", o.degree, "permutation degree for --generators");
  app.add_option("--functor", o.functor, "builtin-mu, trivial, or a functor spec file")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}))->capture_default_str();
  app.add_option("--output", o.output, "write the artifact to this file instead of stdout");
  app.add_option("--cache-dir", o.cache_dir, "directory for content-addressed result caching")->envname("BURNSIDE_CACHE_DIR");
  app.add_option("--jobs", o.jobs, "parallelism degree; output is canonical regardless")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for sampled verification")->capture_default_str();

  auto* marks = app.add_subcommand("marks", "compute the extended table of marks");
  auto* verify = app.add_subcommand("verify", "run the invariant suite, one pass/fail line per property");
  auto* cell = app.add_subcommand("cell-search", "enumerate decorated sets and filter base-set candidates");
  cell->add_option("--green-file", o.green_file, "derive the character target from a Green function file");
  cell->add_option("--min-left-cell", o.min_left_cell, "smallest admissible cell size")->capture_default_str();
  cell->add_option("--big-cell-threshold", o.big_cell_threshold, "size that counts as a big cell")->capture_default_str();
  cell->add_option("--min-big-cells", o.min_big_cells, "required number of big cells")->capture_default_str();
  cell->add_option("--min-double-cell", o.min_double_cell, "smallest admissible double cell")->capture_default_str();
  auto* parabolic = app.add_subcommand("parabolic", "solve the parabolic character blocks");
  parabolic->add_option("--blocks-file", o.blocks_file, "block targets and degeneration order")->required();
  auto* product = app.add_subcommand("product", "multiply ring element expressions");
  product->add_option("exprs", o.exprs, "expressions like \"21*S4 + 6*K1'\"")->required();
  auto* euler = app.add_subcommand("euler", "equivariant orbit count of ring element expressions");
  euler->add_option("exprs", o.exprs, "expressions like \"21*S4 + 6*K1'\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (marks->parsed()) return cmd_marks(o);
    if (verify->parsed()) return cmd_verify(o);
    if (cell->parsed()) return cmd_cell_search(o);
    if (parabolic->parsed()) return cmd_parabolic(o);
    if (product->parsed()) return cmd_product(o);
    if (euler->parsed()) return cmd_euler(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
