// Command-line surface for the generalized roundness toolkit: tree family
// generation, numerical gamma, closed-form bounds, simplex gaps, witness
// construction and table reproduction.
//
// Exit codes: 0 success; 1 hard error; 2 negative-but-valid outcome
// (hypothesis failure, degenerate metric, non-certifying witness).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grt/bounds.hpp"
#include "grt/error.hpp"
#include "grt/format.hpp"
#include "grt/gamma.hpp"
#include "grt/metric.hpp"
#include "grt/simplex.hpp"
#include "grt/table.hpp"
#include "grt/tree.hpp"
#include "grt/tree_io.hpp"
#include "grt/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw grt::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw grt::Error("cannot write " + path);
  out << content;
  if (!out) throw grt::Error("write failed for " + path);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw grt::Error("bad integer '" + tok + "' in list");
    }
  }
  if (out.empty()) throw grt::Error("empty integer list");
  return out;
}

void print_bound(const grt::BoundReport& b) {
  std::string line = std::string(grt::to_string(b.kind)) + " " + b.source +
                     " " + grt::format_fixed(b.value, 9);
  if (b.argmin_k) line += " k=" + std::to_string(*b.argmin_k);
  if (!b.note.empty()) line += " note=" + b.note;
  std::cout << line << "\n";
}

void print_invalid_bound(const char* kind, const char* source,
                         const std::string& reason) {
  std::cout << kind << " " << source << " invalid note=" << reason << "\n";
}

struct GenOptions {
  std::string family;
  std::string degrees;
  std::string positions;
  int branching = 0, depth = 0, degree = 0, radius = 0;
  int teeth = 0, gap = 0, shaft = 0, leaves = 0;
  int ymin = 0, ymax = 0;
  std::string out;
};

grt::RootedTree generate(const GenOptions& g) {
  if (g.family == "sst") return grt::build_sst(parse_int_list(g.degrees));
  if (g.family == "nary") return grt::build_complete_nary(g.branching, g.depth);
  if (g.family == "binary") return grt::build_complete_nary(2, g.depth);
  if (g.family == "kregular")
    return grt::build_kregular_truncation(g.degree, g.radius);
  if (g.family == "star") return grt::build_star(g.leaves);
  if (g.family == "ychain") return grt::build_ychain(g.ymin, g.ymax);
  if (g.family == "comb")
    return grt::build_comb(grt::full_comb_teeth(g.teeth)).tree;
  if (g.family == "comb-uniform")
    return grt::build_comb(grt::uniform_comb_teeth(g.teeth, g.gap)).tree;
  if (g.family == "comb-set") {
    grt::ToothSet t;
    if (!g.positions.empty()) t.positions = parse_int_list(g.positions);
    t.shaft_length = g.shaft > 0
                         ? g.shaft
                         : (t.positions.empty() ? 1 : t.positions.back());
    return grt::build_comb(t).tree;
  }
  throw grt::Error("unknown family '" + g.family + "'");
}

int run_bounds(const std::string& family, const GenOptions& g) {
  using grt::format_fixed;
  if (family == "comb") {
    if (g.teeth < 2) throw grt::Error("--teeth must be >= 2");
    print_bound(grt::comb_lower_bound(g.teeth));
    print_bound(grt::comb_upper_bound(g.teeth));
    return kExitOk;
  }
  if (family == "star") {
    if (g.leaves < 2) throw grt::Error("--leaves must be >= 2");
    print_bound(grt::generic_lower_bound(g.leaves + 1, 1));
    grt::BoundReport exact{grt::BoundKind::exact,
                           grt::star_gamma_exact(g.leaves), "star-exact",
                           std::nullopt, true, ""};
    print_bound(exact);
    return kExitOk;
  }
  if (family == "bifurcation") {
    grt::BoundReport b{grt::BoundKind::upper,
                       grt::bifurcation_bound(g.branching, g.depth),
                       "bifurcation", std::nullopt, true, ""};
    print_bound(b);
    return kExitOk;
  }

  // Spherically symmetric families: LowBnd + UppBnd (+ comb-upper for
  // binary, which contains an isometric comb).
  grt::DegreeSequence seq;
  if (family == "binary") {
    if (g.depth < 1) throw grt::Error("--depth must be >= 1");
    seq.assign(g.depth, 2);
  } else if (family == "nary") {
    seq.assign(g.depth, g.branching);
  } else if (family == "kregular") {
    seq.assign(g.radius, g.degree - 1);
    seq.at(0) = g.degree;
  } else if (family == "sst") {
    seq = parse_int_list(g.degrees);
  } else {
    throw grt::Error("unknown family '" + family + "'");
  }
  for (int d : seq)
    if (d < 1) throw grt::Error("degree sequence entries must be >= 1");
  const int n = static_cast<int>(seq.size());
  long long vertices = 1, level = 1;
  for (int d : seq) {
    level *= d;
    vertices += level;
    if (vertices > (1ll << 40)) throw grt::Error("family too large");
  }
  bool negative = false;
  if (vertices >= 3) {
    print_bound(grt::generic_lower_bound(vertices, n));
  } else {
    print_invalid_bound("lower", "LowBnd", "needs at least 3 vertices");
    negative = true;
  }
  try {
    print_bound(grt::sst_upper_bound(seq, n));
  } catch (const grt::Error& e) {
    print_invalid_bound("upper", "UppBnd", e.what());
    negative = true;
  }
  if (family == "binary" && g.depth >= 2)
    print_bound(grt::comb_upper_bound(g.depth));
  return negative ? kExitNegative : kExitOk;
}

grt::Comb rebuild_comb(const GenOptions& g) {
  if (!g.positions.empty()) {
    grt::ToothSet t;
    t.positions = parse_int_list(g.positions);
    t.shaft_length = g.shaft > 0 ? g.shaft : t.positions.back();
    return grt::build_comb(t);
  }
  if (g.teeth < 1) throw grt::Error("comb strategy needs --teeth or --positions");
  if (g.gap > 0) return grt::build_comb(grt::uniform_comb_teeth(g.teeth, g.gap));
  return grt::build_comb(grt::full_comb_teeth(g.teeth));
}

bool same_tree(const grt::RootedTree& x, const grt::RootedTree& y) {
  return x.vertex_count() == y.vertex_count() && x.root() == y.root() &&
         x.edges() == y.edges();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized roundness of finite metric trees"};
  app.require_subcommand(1);

  GenOptions g;
  std::string tree_path, simplex_text, table_name, strategy;
  double p_value = 0.0;
  grt::ScanConfig scan;
  double curve_pmin = 0.0, curve_pmax = 0.0, curve_step = 0.0;
  grt::SearchConfig search;
  int witness_k = 1, witness_branches = 2, witness_count = 0, witness_q = 0;
  bool pin_root = false, paper_format = false;

  auto add_family_options = [&](CLI::App* cmd) {
    cmd->add_option("--degrees", g.degrees, "comma-separated degree sequence");
    cmd->add_option("--branching", g.branching, "children per vertex");
    cmd->add_option("--depth", g.depth, "tree depth / radius");
    cmd->add_option("--degree", g.degree, "vertex degree (k-regular)");
    cmd->add_option("--radius", g.radius, "truncation radius");
    cmd->add_option("--teeth", g.teeth, "number of teeth");
    cmd->add_option("--gap", g.gap, "uniform tooth spacing");
    cmd->add_option("--positions", g.positions, "comma-separated tooth positions");
    cmd->add_option("--shaft", g.shaft, "shaft length");
    cmd->add_option("--leaves", g.leaves, "number of star leaves");
    cmd->add_option("--min", g.ymin, "first star size of the chain");
    cmd->add_option("--max", g.ymax, "last star size of the chain");
  };

  auto* gen = app.add_subcommand("gen", "generate a tree family member");
  gen->add_option("--family", g.family, "family name")->required();
  add_family_options(gen);
  gen->add_option("--out", g.out, "output tree file")->required();

  auto* gam = app.add_subcommand("gamma", "numerical generalized roundness");
  gam->add_option("tree", tree_path, "tree file")->required();
  gam->add_option("--pmin", scan.p_min, "scan window start");
  gam->add_option("--pmax", scan.p_max, "scan window end");
  gam->add_option("--steps", scan.grid_steps, "grid steps");
  gam->add_option("--tol", scan.bisect_tolerance, "bisection tolerance");
  gam->add_option("--singular", scan.singular_threshold, "singularity threshold");

  auto* bnd = app.add_subcommand("bounds", "closed-form bounds for a family");
  bnd->add_option("--family", g.family, "family name")->required();
  add_family_options(bnd);

  auto* gapc = app.add_subcommand("gap", "simplex gap value or curve");
  gapc->add_option("tree", tree_path, "tree file")->required();
  gapc->add_option("--simplex", simplex_text, "a:<ids>;b:<ids>")->required();
  gapc->add_option("--p", p_value, "single exponent");
  gapc->add_option("--pmin", curve_pmin, "curve start");
  gapc->add_option("--pmax", curve_pmax, "curve end");
  gapc->add_option("--step", curve_step, "curve step");
  gapc->add_option("--out", g.out, "CSV output path (default stdout)");

  auto* wit = app.add_subcommand("witness", "negative-gap certificate");
  wit->add_option("tree", tree_path, "tree file")->required();
  wit->add_option("--p", p_value, "exponent to certify against")->required();
  wit->add_option("--strategy", strategy, "comb | thm21 | thm33 | search")
      ->required();
  wit->add_option("--k", witness_k, "cut depth (thm21)");
  wit->add_option("--branches", witness_branches, "branch vertices (thm33)");
  wit->add_option("--count", witness_count, "teeth in the simplex (comb)");
  add_family_options(wit);
  wit->add_option("--q", witness_q, "simplex size (search)");
  wit->add_option("--seed", search.seed, "search seed");
  wit->add_option("--restarts", search.restarts, "search restarts");
  wit->add_option("--moves", search.max_moves, "moves per restart");
  wit->add_flag("--pin-root", pin_root, "pin all b-points to the root");

  auto* tab = app.add_subcommand("table", "reproduce a bounds table as CSV");
  tab->add_option("--name", table_name, "comb | binary")->required();
  tab->add_option("--out", g.out, "CSV output path")->required();
  tab->add_flag("--paper-format", paper_format, "4-decimal presentation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const grt::RootedTree tree = generate(g);
      write_file(g.out, grt::serialize(tree));
      std::cout << tree.vertex_count() << "\n";
      return kExitOk;
    }

    if (gam->parsed()) {
      const grt::RootedTree tree = grt::parse(read_file(tree_path));
      if (tree.vertex_count() <= 2) {
        std::cout << "degenerate-small-space: metric has <= 2 points; every "
                     "exponent satisfies the inequalities\n";
        return kExitNegative;
      }
      const grt::GammaEstimate est = grt::gamma(grt::path_metric(tree), scan);
      if (est.indicator == grt::GammaIndicator::none_in_range) {
        std::cout << "gamma=none bracket=[" << grt::format_fixed(est.p_low, 9)
                  << "," << grt::format_fixed(est.p_high, 9)
                  << "] indicator=none-in-range evals=" << est.evaluations
                  << "\n";
        return kExitOk;
      }
      std::cout << "gamma=" << grt::format_fixed(est.midpoint(), 9)
                << " bracket=[" << grt::format_fixed(est.p_low, 12) << ","
                << grt::format_fixed(est.p_high, 12)
                << "] indicator=" << grt::to_string(est.indicator)
                << " evals=" << est.evaluations << "\n";
      return kExitOk;
    }

    if (bnd->parsed()) return run_bounds(g.family, g);

    if (gapc->parsed()) {
      const grt::RootedTree tree = grt::parse(read_file(tree_path));
      const grt::DistanceMatrix metric = grt::path_metric(tree);
      const grt::Simplex simplex = grt::parse_simplex(simplex_text);
      if (curve_step > 0.0) {
        const grt::GapCurve curve =
            grt::gap_curve(metric, simplex, curve_pmin, curve_pmax, curve_step);
        std::string csv = "p,gap\n";
        for (size_t i = 0; i < curve.p_grid.size(); ++i)
          csv += grt::format_fixed(curve.p_grid[i]) + "," +
                 grt::format_fixed(curve.values[i]) + "\n";
        if (g.out.empty())
          std::cout << csv;
        else
          write_file(g.out, csv);
        return kExitOk;
      }
      if (!(p_value > 0.0)) throw grt::Error("need --p or a --pmin/--pmax/--step range");
      std::cout << grt::format_fixed(grt::gap(metric, simplex, p_value), 9)
                << "\n";
      return kExitOk;
    }

    if (wit->parsed()) {
      const grt::RootedTree tree = grt::parse(read_file(tree_path));
      std::optional<grt::Witness> witness;
      if (strategy == "comb") {
        const grt::Comb comb = rebuild_comb(g);
        if (!same_tree(comb.tree, tree))
          throw grt::Error("tree file does not match the declared comb");
        const int count = witness_count > 0
                              ? witness_count
                              : static_cast<int>(comb.teeth.positions.size());
        witness = grt::comb_witness(comb, count, p_value);
      } else if (strategy == "thm21") {
        grt::Simplex s = grt::sst_witness(tree, witness_k);
        witness = grt::make_witness(grt::path_metric(tree), std::move(s),
                                    p_value, grt::Provenance::thm21);
      } else if (strategy == "thm33") {
        std::vector<int> path{tree.root()};
        while (!tree.children(path.back()).empty())
          path.push_back(tree.children(path.back()).front());
        grt::Simplex s = grt::bifurcation_witness(tree, path, witness_branches);
        witness = grt::make_witness(grt::path_metric(tree), std::move(s),
                                    p_value, grt::Provenance::thm33);
      } else if (strategy == "search") {
        search.q = witness_q > 0
                       ? witness_q
                       : std::min<int>(16, static_cast<int>(tree.leaves().size()));
        if (search.q < 2) search.q = 2;
        if (pin_root) search.pin_b = tree.root();
        witness = grt::search_witness(grt::path_metric(tree), p_value, search);
      } else {
        throw grt::Error("unknown strategy '" + strategy + "'");
      }
      std::cout << grt::format_witness(*witness) << "\n";
      return witness->certifying() ? kExitOk : kExitNegative;
    }

    if (tab->parsed()) {
      std::string csv;
      if (table_name == "comb") {
        if (paper_format) throw grt::Error("--paper-format applies to the binary table");
        csv = grt::render_comb_csv(grt::comb_table());
      } else if (table_name == "binary") {
        csv = grt::render_binary_csv(grt::binary_table(), paper_format);
      } else {
        throw grt::Error("unknown table '" + table_name + "'");
      }
      write_file(g.out, csv);
      std::cout << "wrote " << g.out << "\n";
      return kExitOk;
    }
  } catch (const grt::HypothesisError& e) {
    std::cerr << "hypothesis: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
