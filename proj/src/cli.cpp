#include "metgraph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "metgraph/canonical.hpp"
#include "metgraph/error.hpp"
#include "metgraph/format.hpp"
#include "metgraph/io.hpp"
#include "metgraph/potential.hpp"
#include "metgraph/resistance_reduction.hpp"
#include "metgraph/spectral.hpp"

namespace metgraph::cli {

namespace {

const char *verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

void line(std::ostream &out, const std::string &key, double value) { out << key << ": " << format_number(value) << '\n'; }

void report_validate(std::ostream &out, const GraphPtr &g, double tol) {
  std::size_t bridges = 0;
  std::size_t valence_total = 0;
  for (EdgeId e = 0; e < g->edge_count(); ++e) bridges += is_bridge(*g, e) ? 1 : 0;
  for (VertexId v = 0; v < g->vertex_count(); ++v) valence_total += g->valence(v);
  const GraphMeasure mu = canonical_measure(g);
  const double mass = total_mass(mu);
  out << "vertices: " << g->vertex_count() << '\n';
  out << "edges: " << g->edge_count() << '\n';
  line(out, "total_length", g->total_length());
  out << "cycle_rank: " << cycle_space_rank(*g) << '\n';
  out << "bridges: " << bridges << '\n';
  out << "valence_sum: " << valence_total << " (" << verdict(valence_total == 2 * g->edge_count()) << ")\n";
  line(out, "canonical_mass", mass);
  out << "verdict: " << verdict(std::abs(mass - 1.0) <= tol) << '\n';
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Computations on metrized graphs", "metgraph"};
  app.require_subcommand(1);

  double tol = 1e-9;
  app.add_option("--tol", tol, "tolerance for PASS/FAIL verdicts")
      ->envname("METGRAPH_TOL")
      ->check(CLI::PositiveNumber);

  std::string file;
  auto with_graph = [&file](CLI::App *sub) {
    sub->add_option("graph", file, "graph file")->required()->check(CLI::ExistingFile);
    return sub;
  };

  auto *validate = with_graph(app.add_subcommand("validate", "check the model and report invariants"));

  std::string from, to;
  auto *resistance = with_graph(app.add_subcommand("resistance", "effective resistance r(from, to)"));
  resistance->add_option("--from", from)->required();
  resistance->add_option("--to", to)->required();

  std::string y, z, at;
  auto *jfun = with_graph(app.add_subcommand("jfun", "j_z(x, y): potential for unit current from y to grounded z"));
  jfun->add_option("--y", y)->required();
  jfun->add_option("--z", z)->required();
  jfun->add_option("--at", at, "evaluation point; all vertices when omitted");

  std::string source, sink, ground;
  double amps = 1.0;
  auto *current = with_graph(app.add_subcommand("current", "edge currents for an injected current"));
  current->add_option("--source", source)->required();
  current->add_option("--sink", sink)->required();
  current->add_option("--amps", amps)->check(CLI::PositiveNumber);
  current->add_option("--ground", ground)->required();

  auto *canonical = with_graph(app.add_subcommand("canonical", "canonical measure as CSV"));
  auto *foster = with_graph(app.add_subcommand("foster", "Foster sum against #V - 1"));
  auto *cyclerank = with_graph(app.add_subcommand("cyclerank", "sum L_e/(R_e + L_e) against #E - #V + 1"));

  std::string tau_at;
  auto *tau_cmd = with_graph(app.add_subcommand("tau", "tau invariant"));
  tau_cmd->add_option("--at", tau_at, "base point y (default: first vertex)");

  std::string anchor;
  std::size_t terms = kDefaultTerms;
  double step = kDefaultMeshStep;
  bool vectors = false;
  auto *spectrum = with_graph(app.add_subcommand("spectrum", "eigenvalues with respect to delta_z"));
  spectrum->add_option("--z", anchor)->required();
  spectrum->add_option("--terms", terms)->check(CLI::PositiveNumber);
  spectrum->add_option("--step", step)->check(CLI::PositiveNumber);
  spectrum->add_flag("--vectors", vectors, "also dump eigenfunctions");

  double x_value = 0.0, y_value = 0.0;
  std::size_t series_terms = 1000;
  auto *identity = app.add_subcommand("identity", "min{x,y} as a sine series");
  identity->add_option("--x", x_value)->required()->check(CLI::Range(0.0, 1.0));
  identity->add_option("--y", y_value)->required()->check(CLI::Range(0.0, 1.0));
  identity->add_option("--terms", series_terms, "number of odd terms")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*identity) {
      const SeriesCheck check = verify_min_identity(x_value, y_value, series_terms);
      const double bound = 2.0 / (std::numbers::pi * std::numbers::pi * static_cast<double>(series_terms));
      line(out, "partial_sum", check.partial_sum);
      line(out, "min", std::min(x_value, y_value));
      line(out, "error", check.error);
      line(out, "tail_bound", bound);
      out << "verdict: " << verdict(check.error <= bound + tol) << '\n';
      return kExitOk;
    }

    const GraphPtr g = parse_graph_file(file);
    if (*validate) {
      report_validate(out, g, tol);
    } else if (*resistance) {
      out << format_number(effective_resistance(g, parse_point(*g, from), parse_point(*g, to))) << '\n';
    } else if (*jfun) {
      const RefinedFunction j = j_function(g, parse_point(*g, y), parse_point(*g, z));
      if (!at.empty()) {
        out << format_number(j.at(parse_point(*g, at))) << '\n';
      } else {
        out << "point,value\n";
        for (VertexId v = 0; v < g->vertex_count(); ++v)
          out << g->vertex_name(v) << ',' << format_number(j.at(g->vertex_point(v))) << '\n';
      }
    } else if (*current) {
      const PotentialSolution sol =
          solve_current(g, parse_point(*g, source), parse_point(*g, sink), amps, parse_point(*g, ground));
      const double defect = solution_defect(sol);
      if (!(defect <= 1e-9 * std::max(1.0, amps)))
        throw Error(ErrorKind::ResidualTooLarge, "potential misses its Laplacian by " + format_number(defect));
      const WeightedGraph &fine = *sol.refinement.fine();
      out << "edge,from,to,current\n";
      for (EdgeId e = 0; e < fine.edge_count(); ++e) {
        const Edge &edge = fine.edge(e);
        out << fine.edge(e).name << ',' << g->describe(sol.refinement.to_coarse(fine.vertex_point(edge.u))) << ','
            << g->describe(sol.refinement.to_coarse(fine.vertex_point(edge.v))) << ','
            << format_number(current_on_edge(sol, e)) << '\n';
      }
    } else if (*canonical) {
      write_measure_csv(out, canonical_measure(g));
    } else if (*foster) {
      const double sum = foster_sum(g);
      const double expected = static_cast<double>(g->vertex_count()) - 1.0;
      line(out, "foster_sum", sum);
      line(out, "expected", expected);
      out << "verdict: " << verdict(std::abs(sum - expected) <= tol) << '\n';
    } else if (*cyclerank) {
      const double sum = cycle_rank_sum(g);
      const double expected = static_cast<double>(cycle_space_rank(*g));
      line(out, "cycle_rank_sum", sum);
      line(out, "expected", expected);
      out << "verdict: " << verdict(std::abs(sum - expected) <= tol) << '\n';
    } else if (*tau_cmd) {
      const GraphPoint base = tau_at.empty() ? g->vertex_point(0) : parse_point(*g, tau_at);
      line(out, "tau", tau(g, base));
    } else if (*spectrum) {
      write_spectrum_csv(out, compute_spectrum(g, parse_point(*g, anchor), step, terms), vectors);
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return is_internal(e.kind()) ? kExitInternalError : kExitInputError;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}

} // namespace metgraph::cli
