// Command-line surface over the core library: stratification reports, Keel
// ring dimensions, arrangement invariants, involution queries. Output is
// deterministic (byte-identical for identical argv).

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "m0n/arrangement.hpp"
#include "m0n/involution.hpp"
#include "m0n/json_writer.hpp"
#include "m0n/keel.hpp"
#include "m0n/stable_tree.hpp"
#include "m0n/strata.hpp"
#include "m0n/version.hpp"

namespace {

using namespace m0n;

// parameter outside the declared grammar; exits with the usage code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json report_header(const std::string& module, Json params) {
  Json j = Json::object();
  j.set("schema", 1);
  j.set("module", module);
  j.set("version", version_string);
  j.set("params", std::move(params));
  return j;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

template <typename T>
std::string joined(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << " ";
    os << xs[i];
  }
  return os.str();
}

void guard(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

struct Options {
  int n = 0;
  int degree = -1;
  bool basis = false;
  bool check = false;
  std::string builder;
  int param = 0;
  long long verify_fp = 0;
  bool check_dr = false;
  bool fixed_flats = false;
  bool ny = false;
  bool shift_each_factor = false;
  bool residue = false;
  bool orbits = false;
  bool check_monad = false;
  std::string double_values;
  int pairs = -1;
  int grade = -1;
  int a_pairs = 0;
  int b_pairs = 0;
  int slot = 1;
  bool trees = false;
  std::string values;
  std::string epsilon;
  std::string format = "table";
  bool force = false;
};

std::vector<ProjPoint> parse_point_list(const std::string& csv) {
  std::vector<ProjPoint> points;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) points.push_back(parse_proj_point(item));
  return points;
}

// every cover relation must contract back to its coarser tree, and the
// count polynomial must be palindromic
bool poset_self_check(const StrataPoset& poset, const IntPoly& poly) {
  for (auto [a, b] : poset.cover_relations) {
    const StableTree& fine = poset.strata[b].tree;
    bool found = false;
    for (int e = 0; e < fine.num_edges() && !found; ++e)
      found = canonical_form(contract(fine, e)) == poset.strata[a].tree;
    if (!found) return false;
  }
  return poly.palindromic();
}

void run_strata(const Options& o) {
  guard(o.n >= 3, "strata needs --n >= 3");
  guard(o.n <= 10 || o.force, "n > 10 needs --force");
  LabelSet S = LabelSet::integer_range(1, o.n);
  if (o.format == "dot") {
    write_hasse_dot(std::cout, strata_poset(S));
    return;
  }
  StrataPoset poset = strata_poset(S);
  IntPoly poly = compactified_count_poly(S);
  bool check_ok = o.check ? poset_self_check(poset, poly) : true;
  if (o.format == "json") {
    Json j = report_header("strata", Json::object().set("n", o.n));
    j.set("n", o.n);
    j.set("counts_by_codim", Json::array_of(poset.counts_by_codim()));
    j.set("betti", Json::array_of(poly.c));
    j.set("count_poly", Json::array_of(poly.c));
    j.set("cover_relations", static_cast<long long>(poset.cover_relations.size()));
    if (o.check) j.set("check", check_ok);
    emit(j);
  } else {
    std::cout << "n: " << o.n << "\n"
              << "counts_by_codim: " << joined(poset.counts_by_codim()) << "\n"
              << "betti: " << joined(poly.c) << "\n"
              << "count_poly: " << joined(poly.c) << "\n"
              << "euler: " << poly.eval(1) << "\n";
    if (o.check)
      std::cout << "check: " << (check_ok ? "ok" : "failed") << "\n";
  }
  if (o.check && !check_ok) throw std::domain_error("poset self-check failed");
}

void run_maxdeg(const Options& o) {
  guard(o.n >= 3, "maxdeg needs --n >= 3");
  guard(o.n <= 10 || o.force, "n > 10 needs --force");
  LabelSet S = LabelSet::integer_range(1, o.n);
  auto points = maximal_degenerations(S);
  if (o.format == "dot") {
    for (std::size_t i = 0; i < points.size(); ++i)
      write_tree_dot(std::cout, points[i].tree, "t" + std::to_string(i));
    return;
  }
  if (o.format == "json") {
    Json j = report_header("maxdeg", Json::object().set("n", o.n));
    j.set("n", o.n);
    j.set("count", static_cast<long long>(points.size()));
    Json trees = Json::array();
    for (const Stratum& s : points) trees.push_back(tree_json(s.tree));
    j.set("trees", std::move(trees));
    emit(j);
    return;
  }
  std::cout << "count: " << points.size() << "\n";
}

void run_keel(const Options& o) {
  guard(o.n >= 4, "keel needs --n >= 4");
  guard(o.n <= 10 || o.force, "n > 10 needs --force");
  KeelRing ring(LabelSet::integer_range(1, o.n));
  if (o.degree >= 0)
    guard(o.degree <= ring.top_degree(), "degree above |S|-3");

  bool relations_ok = true;
  if (o.check) {
    const int m = o.n;
    for (int a = 0; a < m && relations_ok; ++a)
      for (int b = a + 1; b < m && relations_ok; ++b)
        for (int c = b + 1; c < m && relations_ok; ++c)
          for (int d = c + 1; d < m && relations_ok; ++d)
            relations_ok =
                ring.normal_form(ring.four_point_relation(a, b, c, d)).is_zero();
    const auto& cs = ring.classes();
    for (std::size_t i = 0; i < cs.size() && relations_ok; ++i)
      for (std::size_t j = i; j < cs.size() && relations_ok; ++j)
        if (is_crossing(cs[i], cs[j]))
          relations_ok = ring.normal_form(ring.monomial_element(
                                 {static_cast<int>(i), static_cast<int>(j)}))
                             .is_zero();
  }

  if (o.format == "json") {
    Json params = Json::object().set("n", o.n);
    if (o.degree >= 0) params.set("degree", o.degree);
    Json j = report_header("keel", std::move(params));
    Json classes = Json::array();
    for (std::size_t i = 0; i < ring.classes().size(); ++i) {
      std::vector<std::string> names;
      for (int idx : ring.classes()[i].rep_indices())
        names.push_back(ring.labels().name(idx));
      classes.push_back(Json::array_of(names));
    }
    j.set("classes", std::move(classes));
    if (o.degree >= 0) {
      j.set("degree", o.degree);
      j.set("dim", ring.graded_dimension(o.degree));
      if (o.basis) {
        Json basis = Json::array();
        for (const Monomial& m : ring.quotient_basis(o.degree))
          basis.push_back(ring.monomial_str(m));
        j.set("basis", std::move(basis));
      }
    } else {
      j.set("dims", Json::array_of(ring.all_graded_dimensions()));
    }
    if (o.check) j.set("relations_vanish", relations_ok);
    emit(j);
  } else {
    if (o.degree >= 0) {
      std::cout << ring.graded_dimension(o.degree) << "\n";
      if (o.basis)
        for (const Monomial& m : ring.quotient_basis(o.degree))
          std::cout << ring.monomial_str(m) << "\n";
    } else {
      std::cout << "dims: " << joined(ring.all_graded_dimensions()) << "\n";
    }
    if (o.check)
      std::cout << "relations_vanish: " << (relations_ok ? "true" : "false")
                << "\n";
  }
  if (o.check && !relations_ok)
    throw std::domain_error("a relation failed to reduce to zero");
}

Arrangement built_arrangement(const std::string& builder, int param) {
  if (builder == "braid") {
    guard(param >= 2, "braid builder needs --param >= 2");
    return braid_arrangement(param);
  }
  if (builder == "m0n") {
    guard(param >= 4, "m0n builder needs --param >= 4");
    return m0n_arrangement(param);
  }
  if (builder == "ny") {
    guard(param >= 1, "ny builder needs --param >= 1");
    return ny_arrangement(param);
  }
  if (builder == "gravfactor") {
    guard(param >= 4, "gravfactor builder needs --param >= 4");
    return grav_ny_factor_arrangement(param);
  }
  throw UsageError("unknown builder: " + builder);
}

void run_arrangement(const Options& o) {
  Arrangement A = built_arrangement(o.builder, o.param);
  IntersectionPoset poset = intersection_poset(A);
  IntPoly chi = characteristic_polynomial(A);
  GradedDims poin = poincare_complement(A);

  bool fp_match = false;
  long long fp_count = 0;
  if (o.verify_fp) {
    fp_count = complement_count_fp(A, o.verify_fp);
    fp_match = chi.eval(o.verify_fp) == fp_count;
  }
  bool dr_ok = true;
  if (o.check_dr)
    for (int i = 0; i < A.size(); ++i)
      dr_ok = dr_ok && deletion_restriction_check(A, i);
  std::vector<long long> fixed_by_codim;
  if (o.fixed_flats) {
    fixed_by_codim.assign(A.dim() + 1, 0);
    for (const Flat& f : poset.flats)
      if (flat_meets_fixed_locus(f)) fixed_by_codim[f.codim]++;
  }

  if (o.format == "json") {
    Json params = Json::object().set("builder", o.builder).set("param", o.param);
    if (o.verify_fp) params.set("verify_fp", o.verify_fp);
    Json j = report_header("arrangement", std::move(params));
    j.set("dim", A.dim());
    j.set("hyperplanes", A.size());
    j.set("flat_counts_by_codim", Json::array_of(poset.flat_counts_by_codim()));
    j.set("char_poly", Json::array_of(chi.c));
    j.set("poincare", Json::array_of(poin.dims));
    if (o.verify_fp) {
      Json fp = Json::object();
      fp.set("prime", o.verify_fp);
      fp.set("chi_value", chi.eval(o.verify_fp));
      fp.set("point_count", fp_count);
      fp.set("match", fp_match);
      j.set("fp_check", std::move(fp));
    }
    if (o.check_dr) j.set("deletion_restriction", dr_ok);
    if (o.fixed_flats)
      j.set("fixed_locus_flats_by_codim", Json::array_of(fixed_by_codim));
    emit(j);
  } else {
    std::cout << "dim: " << A.dim() << "\n"
              << "hyperplanes: " << A.size() << "\n"
              << "flat_counts_by_codim: " << joined(poset.flat_counts_by_codim())
              << "\n"
              << "char_poly: " << joined(chi.c) << "\n"
              << "poincare: " << joined(poin.dims) << "\n";
    if (o.verify_fp)
      std::cout << "fp_check: chi(" << o.verify_fp
                << ")=" << chi.eval(o.verify_fp) << " count=" << fp_count
                << " match=" << (fp_match ? "true" : "false") << "\n";
    if (o.check_dr)
      std::cout << "deletion_restriction: " << (dr_ok ? "true" : "false")
                << "\n";
    if (o.fixed_flats)
      std::cout << "fixed_locus_flats_by_codim: " << joined(fixed_by_codim)
                << "\n";
  }
  if (o.verify_fp && !fp_match)
    throw std::domain_error("finite-field check failed");
  if (o.check_dr && !dr_ok)
    throw std::domain_error("deletion-restriction identity failed");
}

void run_grav(const Options& o) {
  guard(o.n >= 3, "grav needs --n >= 3");
  guard(o.n <= 10 || o.force, "n > 10 needs --force");
  if (o.residue) {
    guard(o.n >= 4, "--residue needs --n >= 4");
    auto trees = enumerate_stable_trees(LabelSet::integer_range(1, o.n), 1);
    bool all_ok = true;
    Json items = Json::array();
    for (const StableTree& t : trees) {
      ResidueCheck check = residue_dim_check(t);
      all_ok = all_ok && check.ok;
      Json item = Json::object();
      item.set("valences", Json::array()
                               .push_back(t.valence(0))
                               .push_back(t.valence(1)));
      item.set("stratum_dims", Json::array_of(check.stratum_dims));
      item.set("kunneth_dims", Json::array_of(check.kunneth_dims));
      item.set("ok", check.ok);
      items.push_back(std::move(item));
    }
    if (o.format == "json") {
      Json j = report_header("grav",
                             Json::object().set("n", o.n).set("residue", true));
      j.set("one_edge_trees", static_cast<long long>(trees.size()));
      j.set("all_ok", all_ok);
      j.set("degree_shift", 1);
      j.set("tate_twist", 1);
      j.set("checks", std::move(items));
      emit(j);
    } else {
      std::cout << "one_edge_trees: " << trees.size() << "\n"
                << "all_ok: " << (all_ok ? "true" : "false") << "\n";
    }
    if (!all_ok) throw std::domain_error("residue dimension check failed");
    return;
  }
  GradedDims dims =
      o.ny ? grav_ny_dims(o.n, o.shift_each_factor) : grav_dims(o.n);
  if (o.format == "json") {
    Json params = Json::object().set("n", o.n).set("ny", o.ny);
    if (o.ny) params.set("shift_each_factor", o.shift_each_factor);
    Json j = report_header("grav", std::move(params));
    j.set("kind", o.ny ? "grav_ny" : "grav");
    j.set("dims", Json::array_of(dims.dims));
    j.set("suspension", dims.suspension);
    if (o.ny) j.set("factor", Json::array_of(grav_ny_factor_dims(o.n).dims));
    emit(j);
  } else {
    std::cout << "dims: " << joined(dims.dims) << "\n"
              << "suspension: " << dims.suspension << "\n";
  }
}

void run_involution(const Options& o) {
  if (o.check_monad) {
    const int max_pairs = o.pairs >= 0 ? o.pairs : 2;
    guard(max_pairs <= 4 || o.force, "pairs > 4 needs --force");
    bool ok = monad_law_check(max_pairs);
    if (o.format == "json") {
      Json j = report_header(
          "involution",
          Json::object().set("check_monad", true).set("pairs", max_pairs));
      j.set("monad_law", ok);
      emit(j);
    } else {
      std::cout << "monad_law: " << (ok ? "true" : "false") << "\n";
    }
    if (!ok) throw std::domain_error("monad law violated");
    return;
  }
  if (!o.double_values.empty()) {
    std::vector<ProjPoint> points = parse_point_list(o.double_values);
    std::vector<Rational> xs;
    for (const ProjPoint& p : points) {
      guard(!p.infinite, "--double needs finite coordinates");
      xs.push_back(p.value);
    }
    Doubling d = doubling_map(xs);
    std::vector<std::string> doubled;
    for (const Rational& v : d.points) doubled.push_back(to_string(v));
    if (o.format == "json") {
      Json j = report_header(
          "involution", Json::object().set("double", o.double_values));
      j.set("points", Json::array_of(doubled));
      j.set("meets_fix_locus", d.meets_fix_locus);
      emit(j);
    } else {
      std::cout << "points: " << joined(doubled) << "\n"
                << "meets_fix_locus: " << (d.meets_fix_locus ? "true" : "false")
                << "\n";
    }
    return;
  }
  guard(o.orbits, "involution needs --orbits, --double or --check-monad");
  guard(o.pairs >= 0, "--orbits needs --pairs");
  guard(o.pairs <= 4 || o.force, "pairs > 4 needs --force");
  PairedLabelSet L(o.pairs);
  guard(o.grade >= 0 && o.grade <= L.size() - 3, "grade out of range");

  auto trees = enumerate_stable_trees(L.labels(), o.grade);
  std::vector<std::pair<StableTree, StableTree>> orbit_reps;  // rep, image
  std::vector<bool> used(trees.size(), false);
  auto find_index = [&](const StableTree& t) {
    for (std::size_t i = 0; i < trees.size(); ++i)
      if (trees[i] == t) return static_cast<int>(i);
    return -1;
  };
  long long fixed = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    StableTree image = induced_tree_action(trees[i]);
    int j = find_index(image);
    if (j >= 0 && !used[j]) used[j] = true;
    if (image == trees[i]) ++fixed;
    orbit_reps.push_back({trees[i], std::move(image)});
  }

  if (o.format == "json") {
    Json params = Json::object().set("pairs", o.pairs).set("grade", o.grade);
    Json j = report_header("involution", std::move(params));
    j.set("trees", static_cast<long long>(trees.size()));
    j.set("orbit_count", static_cast<long long>(orbit_reps.size()));
    j.set("fixed", fixed);
    Json orbits = Json::array();
    for (const auto& [rep, image] : orbit_reps) {
      Json orbit = Json::object();
      orbit.set("size", rep == image ? 1 : 2);
      Json members = Json::array();
      members.push_back(tree_json(rep));
      if (!(rep == image)) members.push_back(tree_json(image));
      orbit.set("trees", std::move(members));
      orbits.push_back(std::move(orbit));
    }
    j.set("orbits", std::move(orbits));
    emit(j);
  } else {
    std::cout << "trees: " << trees.size() << "\n"
              << "orbits: " << orbit_reps.size() << "\n"
              << "fixed: " << fixed << "\n";
  }
}

void run_compose(const Options& o) {
  guard(o.a_pairs >= 0 && o.b_pairs >= 0, "pair counts must be >= 0");
  guard((o.a_pairs <= 4 && o.b_pairs <= 4) || o.force, "pairs > 4 needs --force");
  guard(o.slot >= 1, "--slot is 1-based");
  PairedLabelSet a(o.a_pairs), b(o.b_pairs);
  guard(o.slot <= o.a_pairs, "slot exceeds host pair count");
  const std::string slot = "z" + std::to_string(o.slot);
  PairedLabelSet result = ny_compose(a, slot, b);
  // arity follows the worked gluing (p + p' + 1 pairs); the displayed
  // closed formula would over-count by one pair
  const char* note = "arity from the computed composition: p + p' + 1 pairs";
  if (o.format == "json") {
    Json params = Json::object()
                      .set("a", o.a_pairs)
                      .set("b", o.b_pairs)
                      .set("slot", o.slot);
    Json j = report_header("compose", std::move(params));
    j.set("result_pairs", result.pairs());
    j.set("label_count", result.size());
    j.set("labels", Json::array_of(result.labels().names()));
    j.set("note", note);
    if (o.trees) j.set("tree", tree_json(ny_compose_trees(a, slot, b)));
    emit(j);
  } else {
    std::cout << "result_pairs: " << result.pairs() << "\n"
              << "labels: " << joined(result.labels().names()) << "\n";
    if (o.trees) {
      StableTree t = ny_compose_trees(a, slot, b);
      write_tree_dot(std::cout, t, "composition");
    }
  }
}

void run_classify(const Options& o) {
  guard(!o.values.empty(), "classify needs --values");
  std::vector<ProjPoint> zs;
  std::stringstream ss(o.values);
  std::string item;
  while (std::getline(ss, item, ',')) zs.push_back(parse_proj_point(item));
  guard(!zs.empty(), "classify needs at least one value");
  guard(static_cast<int>(zs.size()) <= 8 || o.force, "more than 8 pairs needs --force");
  PairedConfig config = PairedConfig::from_z(zs);
  NYStratumDescriptor d = classify_ny_config(config);

  int eps_j = -1;
  if (!o.epsilon.empty()) {
    Rational eps = parse_rational(o.epsilon);
    eps_j = epsilon_stratify(config, eps);
  }

  if (o.format == "json") {
    Json params = Json::object().set("values", o.values);
    if (!o.epsilon.empty()) params.set("epsilon", o.epsilon);
    Json j = report_header("classify", std::move(params));
    j.set("pairs", config.pairs());
    j.set("descriptor", d.to_json());
    if (eps_j >= 0) j.set("epsilon_j", eps_j);
    emit(j);
  } else {
    std::cout << "codim: " << d.codim << "\n";
    if (eps_j >= 0) std::cout << "epsilon_j: " << eps_j << "\n";
  }
}

void run_cross_check(const Options& o) {
  guard(o.n >= 4, "cross-check needs --n >= 4");
  guard(o.n <= 7 || o.force, "n > 7 needs --force");
  LabelSet S = LabelSet::integer_range(1, o.n);
  std::vector<long long> from_counts = betti_numbers(S);
  KeelRing ring(S);
  std::vector<long long> from_ring = ring.all_graded_dimensions();
  const bool agree = from_counts == from_ring;
  if (o.format == "json") {
    Json j = report_header("cross-check", Json::object().set("n", o.n));
    j.set("n", o.n);
    j.set("betti_point_count", Json::array_of(from_counts));
    j.set("keel_dims", Json::array_of(from_ring));
    j.set("agree", agree);
    emit(j);
  } else {
    std::cout << "betti_point_count: " << joined(from_counts) << "\n"
              << "keel_dims: " << joined(from_ring) << "\n"
              << "agree: " << (agree ? "true" : "false") << "\n";
  }
  if (!agree) throw std::domain_error("Betti oracles disagree");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stratification toolkit for genus-zero moduli spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd, bool with_dot = false) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(with_dot
                                  ? std::vector<std::string>{"table", "json", "dot"}
                                  : std::vector<std::string>{"table", "json"}));
    cmd->add_flag("--force", o.force, "lift default size guards");
  };

  CLI::App* strata = app.add_subcommand("strata", "stratification report");
  strata->add_option("--n", o.n, "number of marked points")->required();
  add_format(strata, true);
  strata->add_flag("--dot", [&](std::int64_t) { o.format = "dot"; },
                   "emit the Hasse diagram as Graphviz");
  strata->add_flag("--check", o.check,
                   "validate covers by contraction and palindromicity");

  CLI::App* maxdeg = app.add_subcommand("maxdeg", "maximal degenerations");
  maxdeg->add_option("--n", o.n, "number of marked points")->required();
  add_format(maxdeg, true);
  maxdeg->add_flag("--dot", [&](std::int64_t) { o.format = "dot"; },
                   "emit the trees as Graphviz");

  CLI::App* keel = app.add_subcommand("keel", "boundary-divisor ring dimensions");
  keel->add_option("--n", o.n, "number of marked points")->required();
  keel->add_option("--degree", o.degree, "single degree to report");
  keel->add_flag("--basis", o.basis, "also print the quotient basis");
  keel->add_flag("--check", o.check,
                 "verify that every relation reduces to zero");
  add_format(keel);

  CLI::App* arr = app.add_subcommand("arrangement", "hyperplane arrangement invariants");
  arr->add_option("--builder", o.builder, "braid | m0n | ny | gravfactor")->required();
  arr->add_option("--param", o.param, "builder parameter")->required();
  arr->add_option("--verify-fp", o.verify_fp, "verify chi against an F_p point count");
  arr->add_flag("--check-dr", o.check_dr,
                "verify deletion-restriction for every hyperplane");
  arr->add_flag("--fixed-flats", o.fixed_flats,
                "count flats meeting the all-1/2 fixed locus");
  add_format(arr);

  CLI::App* grav = app.add_subcommand("grav", "gravity graded dimensions");
  grav->add_option("--n", o.n, "number of marked points")->required();
  grav->add_flag("--ny", o.ny, "paired variant (Kunneth square)");
  grav->add_flag("--shift-each-factor", o.shift_each_factor,
                 "apply the suspension to each factor instead of once");
  grav->add_flag("--residue", o.residue,
                 "check the one-edge residue dimension bookkeeping");
  add_format(grav);

  CLI::App* inv = app.add_subcommand("involution", "the hidden involution");
  inv->add_flag("--orbits", o.orbits, "list tree orbits");
  inv->add_option("--pairs", o.pairs, "number of z-pairs");
  inv->add_option("--grade", o.grade, "tree grade (edge count)");
  inv->add_option("--double", o.double_values,
                  "double a tuple of exact rationals under x -> 1-x");
  inv->add_flag("--check-monad", o.check_monad,
                "verify the involution squares to the identity everywhere");
  add_format(inv);

  CLI::App* compose = app.add_subcommand("compose", "paired composition arity");
  compose->add_option("--a", o.a_pairs, "host pair count")->required();
  compose->add_option("--b", o.b_pairs, "guest pair count")->required();
  compose->add_option("--slot", o.slot, "1-based z-slot of the host");
  compose->add_flag("--trees", o.trees,
                    "also emit the mirrored double-graft tree");
  add_format(compose);

  CLI::App* classify = app.add_subcommand("classify", "stratum of a paired configuration");
  classify->add_option("--values", o.values,
                       "comma-separated exact z-values, e.g. 1/4,1/3");
  classify->add_option("--epsilon", o.epsilon,
                       "also report the diagonal filtration level");
  add_format(classify);

  CLI::App* cross = app.add_subcommand("cross-check", "two-oracle Betti agreement");
  cross->add_option("--n", o.n, "number of marked points")->required();
  add_format(cross);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "usage error; see --help" << "\n";
    return 2;
  }

  try {
    if (*strata) run_strata(o);
    else if (*maxdeg) run_maxdeg(o);
    else if (*keel) run_keel(o);
    else if (*arr) run_arrangement(o);
    else if (*grav) run_grav(o);
    else if (*inv) run_involution(o);
    else if (*compose) run_compose(o);
    else if (*classify) run_classify(o);
    else if (*cross) run_cross_check(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
