// polarix: build, validate, dualize, classify and render polarizations of
// powers of the graded maximal ideal.
//
// Exit codes: 0 verdict true, 1 verdict false, 2 input error, 3 budget error.

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polarix/alexander.hpp"
#include "polarix/degree_two.hpp"
#include "polarix/io.hpp"
#include "polarix/render.hpp"
#include "polarix/simplicial.hpp"

using nlohmann::json;
using namespace polarix;

namespace {

struct RunConfig {
  int m = 3;
  int n = 2;
  bool iso = false;
  std::string format = "json";
  std::string input;
  std::string out;
  unsigned long long seed = 0;  // reserved for randomized searches
  Budgets budgets;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    write_file(cfg.out, text);
  }
}

IsotoneFamily load_family(const RunConfig& cfg) {
  const json parsed = json::parse(read_file(cfg.input));
  IsotoneFamily f = family_from_json(parsed);
  ValidationReport report = validate_family(f);
  if (!report) throw std::invalid_argument("family: " + report.message());
  return f;
}

int cmd_validate(const RunConfig& cfg) {
  const json parsed = json::parse(read_file(cfg.input));
  IsotoneFamily f = family_from_json(parsed);
  ValidationReport report = validate_family(f);
  if (!report) throw std::invalid_argument("family: " + report.message());

  const PolarizationCheck thm = is_valid_polarization(f);
  const bool oracle =
      is_polarization_oracle(generators_from_family(f), f.m(), f.n(), cfg.budgets);
  json out{{"thm", thm.valid}, {"oracle", oracle}, {"agree", thm.valid == oracle}};
  if (thm.witness) out["witness"] = to_json(*thm.witness);
  if (thm.valid != oracle) out["bug"] = "criterion and Hilbert oracle disagree";
  emit(cfg, out.dump(2));
  return thm.valid && oracle ? 0 : 1;
}

std::vector<IsotoneFamily> families_via_trees(int m) {
  // Ideals are invariant under vertex renaming, so canonical trees with all
  // labelings and orientations reach every polarization of (x_1..x_m)^2.
  std::vector<IsotoneFamily> out;
  std::set<std::vector<IndexSet>> seen;
  for (const DirectedLabeledTree& base : trees_up_to_iso(m)) {
    std::vector<std::pair<int, int>> edges;
    for (const TreeEdge& e : base.edges()) edges.push_back({e.tail, e.head});
    for (const DirectedLabeledTree& t : decorations(edges, m + 1)) {
      IsotoneFamily f = family_from_ideal(tree_pair_ideal(t), m, 2);
      if (seen.insert(f.flat()).second) out.push_back(std::move(f));
    }
  }
  return out;
}

int cmd_enumerate(const RunConfig& cfg) {
  const int m = cfg.m, n = cfg.n;
  const bool exhaustive_ok = (m <= 3 && n <= 3) || (m <= 2 && n <= 4);
  const bool tree_ok = n == 2 && m <= 5;
  if (!exhaustive_ok && !tree_ok)
    throw BudgetExceeded("enumerate: supported ranges are m<=3 with n<=3, "
                         "m<=2 with n<=4, and n=2 with m<=5");

  if (cfg.format == "dot") {
    if (n != 2 || !cfg.iso)
      throw std::invalid_argument("enumerate: dot output needs n=2 and --iso");
    std::string text;
    for (const DirectedLabeledTree& t : trees_up_to_iso(m)) text += t.dot();
    emit(cfg, text);
    return 0;
  }
  if (cfg.format != "json")
    throw std::invalid_argument("enumerate: unsupported format " + cfg.format);

  if (cfg.iso && !exhaustive_ok) {
    // Iso classes of polarizations of (x_1..x_m)^2 are the unlabeled trees;
    // one canonical form per tree class.
    std::map<std::vector<IndexSet>, IsotoneFamily> canon;
    for (const DirectedLabeledTree& t : trees_up_to_iso(m)) {
      IsotoneFamily c = canonical_form(
          family_from_ideal(tree_pair_ideal(t), m, 2), cfg.budgets);
      canon.emplace(c.flat(), std::move(c));
    }
    std::string text;
    for (const auto& [key, f] : canon) text += to_json(f).dump() + "\n";
    emit(cfg, text);
    return 0;
  }

  std::vector<IsotoneFamily> families =
      exhaustive_ok ? enumerate_valid_families(m, n) : families_via_trees(m);
  if (cfg.iso) {
    std::map<std::vector<IndexSet>, IsotoneFamily> canon;
    for (const IsotoneFamily& f : families) {
      IsotoneFamily c = canonical_form(f, cfg.budgets);
      canon.emplace(c.flat(), std::move(c));
    }
    families.clear();
    for (auto& [key, f] : canon) families.push_back(std::move(f));
  }
  std::string text;
  for (const IsotoneFamily& f : families) text += to_json(f).dump() + "\n";
  emit(cfg, text);
  return 0;
}

int cmd_dual(const RunConfig& cfg) {
  IsotoneFamily f = load_family(cfg);
  const MonomialIdeal dual = alexander_dual_from_family(f);
  const MonomialIdeal oracle =
      alexander_dual_oracle(generators_from_family(f), cfg.budgets);
  if (dual != oracle) {
    json bug{{"bug", "construction disagrees with the transversal oracle"},
             {"constructed", to_json(dual)},
             {"oracle", to_json(oracle)}};
    emit(cfg, bug.dump(2));
    return 1;
  }
  if (cfg.format == "m2") {
    emit(cfg, to_m2(dual));
  } else if (cfg.format == "json") {
    json out = to_json(dual);
    if (f.n() == 2) out["binary_words"] = rainbow_binary_words(dual);
    emit(cfg, out.dump(2));
  } else {
    throw std::invalid_argument("dual: unsupported format " + cfg.format);
  }
  return 0;
}

int cmd_certify(const RunConfig& cfg) {
  IsotoneFamily f = load_family(cfg);
  if (!is_valid_polarization(f))
    throw std::invalid_argument("certify: family is not a polarization");
  const MonomialIdeal ideal = generators_from_family(f);
  const SimplicialComplex complex = complex_from_ideal(ideal, cfg.budgets);

  json out;
  std::optional<std::vector<int>> hint;
  if (f.m() == 3) {
    const MonomialIdeal dual = alexander_dual_from_family(f);
    const std::vector<Monomial> order = dual_linear_quotients_order(f);
    const bool lq = linear_quotients_check(dual, order);
    out["linear_quotients"] = lq;
    if (lq) {
      // Complements of the ordered dual generators shell the complex.
      std::vector<int> facet_order;
      const std::uint64_t universe = ~0ull >> (64 - complex.vertex_count());
      for (const Monomial& g : order) {
        std::uint64_t mask = 0;
        for (int v : g.support_vars()) mask |= 1ull << v;
        const std::uint64_t facet = universe & ~mask;
        for (int i = 0; i < static_cast<int>(complex.facets().size()); ++i)
          if (complex.facets()[static_cast<std::size_t>(i)] == facet)
            facet_order.push_back(i);
      }
      if (facet_order.size() == complex.facets().size()) hint = facet_order;
    }
  }
  const TopologyVerdict verdict =
      ball_or_sphere_verdict(complex, cfg.budgets, hint ? &*hint : nullptr);
  out["topology"] = to_json(verdict);
  out["f_vector"] = complex.f_vector(cfg.budgets);
  emit(cfg, out.dump(2));

  const bool ok = verdict.kind != BallSphere::unknown &&
                  (!out.contains("linear_quotients") ||
                   out["linear_quotients"].get<bool>());
  return ok ? 0 : 1;
}

int cmd_render(const RunConfig& cfg) {
  IsotoneFamily f = load_family(cfg);
  if (f.m() != 3)
    throw std::invalid_argument("render: only m=3 lattices are drawable");
  emit(cfg, render_svg(f));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for polarizations of (x_1,..,x_m)^n"};
  app.require_subcommand(1);

  RunConfig cfg;
  try {
    cfg.budgets = Budgets::from_env();
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }

  app.add_option("--seed", cfg.seed,
                 "seed for randomized searches (deterministic paths ignore it)");
  app.add_option("--budget-group", cfg.budgets.group_orbit,
                 "largest relabeling group enumerated for canonical forms");
  app.add_option("--budget-subsets", cfg.budgets.hilbert_subsets,
                 "largest generator-subset sweep in the Hilbert oracle");
  app.add_option("--budget-transversals", cfg.budgets.transversals,
                 "largest partial transversal set in dualization");
  app.add_option("--budget-faces", cfg.budgets.complex_faces,
                 "largest face set enumerated per complex");
  app.add_option("--budget-facets", cfg.budgets.shelling_facets,
                 "largest facet count for the shelling search");

  CLI::App* validate = app.add_subcommand("validate",
                                          "spanning-tree criterion vs Hilbert oracle");
  validate->add_option("family", cfg.input, "family JSON file")->required();
  validate->add_option("--out", cfg.out, "write the report here");

  CLI::App* enumerate = app.add_subcommand("enumerate",
                                           "stream all valid polarizations");
  enumerate->add_option("--m", cfg.m, "number of colors")->required();
  enumerate->add_option("--n", cfg.n, "degree")->required();
  enumerate->add_flag("--iso", cfg.iso, "emit canonical forms only");
  enumerate->add_option("--format", cfg.format, "json or dot");
  enumerate->add_option("--out", cfg.out, "write the stream here");

  CLI::App* dual = app.add_subcommand("dual", "Alexander dual of a family");
  dual->add_option("family", cfg.input, "family JSON file")->required();
  dual->add_option("--format", cfg.format, "json or m2");
  dual->add_option("--out", cfg.out, "write the ideal here");

  CLI::App* certify = app.add_subcommand("certify",
                                         "ball/sphere and linear-quotients report");
  certify->add_option("family", cfg.input, "family JSON file")->required();
  certify->add_option("--out", cfg.out, "write the report here");

  CLI::App* render = app.add_subcommand("render", "SVG of the syzygy lattice");
  render->add_option("family", cfg.input, "family JSON file")->required();
  render->add_option("--out", cfg.out, "write the SVG here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (dual->parsed()) return cmd_dual(cfg);
    if (certify->parsed()) return cmd_certify(cfg);
    if (render->parsed()) return cmd_render(cfg);
  } catch (const BudgetExceeded& err) {
    std::cerr << "budget error: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
