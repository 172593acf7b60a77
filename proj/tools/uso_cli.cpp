#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "uso/census.hpp"
#include "uso/checks.hpp"
#include "uso/constructions.hpp"
#include "uso/io.hpp"
#include "uso/lcp.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

// exit codes: 0 success, 1 domain error, 2 I/O or parse error
struct DomainExit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_orientation(const uso::Orientation& phi, const std::string& out,
                       const std::string& dot) {
  if (!out.empty()) uso::save_json_file(out, uso::orientation_to_json(phi));
  if (!dot.empty()) uso::save_text_file(dot, uso::orientation_to_dot(phi));
}

int run(CLI::App& app, int argc, char** argv) {
  std::string family, fpath, beta_path, antichain_path, out_path, dot_path;
  std::string property, in_path, matrix_path, q_path, rule = "least-index";
  std::string start_bits, report_path;
  int n = 0, trials = 0, samples = 0, sample_p = -1;
  std::uint64_t seed = 0;
  bool do_enumerate = false, exact_n2 = false;
  int threads = 1;

  app.add_flag_callback(
      "--version", [] { std::cout << "uso " << kVersion << "\n"; std::exit(0); },
      "print version and exit");
  app.add_option("--threads", threads, "worker cap (results are independent of it)")
      ->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate an orientation from a family");
  gen->add_option("--family", family, "uniform|monotone|k-beta")->required();
  gen->add_option("--n", n, "cube dimension");
  gen->add_option("--f", fpath, "monotone function table JSON");
  gen->add_option("--antichain", antichain_path, "antichain JSON");
  gen->add_option("--beta", beta_path, "beta assignment JSON");
  gen->add_option("--out", out_path, "orientation JSON output")->required();
  gen->add_option("--dot", dot_path, "also write a DOT file");

  auto* check = app.add_subcommand("check", "check a property of an orientation");
  check->add_option("--property", property,
                    "uso|acyclic|locally-uniform|holt-klee|strong-holt-klee")
      ->required();
  check->add_option("--in", in_path, "orientation JSON")->required();

  auto* induce = app.add_subcommand("induce", "USO induced by a P-matrix LCP");
  induce->add_option("--matrix", matrix_path)->required();
  induce->add_option("--q", q_path)->required();
  induce->add_option("--out", out_path)->required();
  induce->add_option("--dot", dot_path);

  auto* solve = app.add_subcommand("solve", "solve a P-matrix LCP exactly");
  solve->add_option("--matrix", matrix_path)->required();
  solve->add_option("--q", q_path)->required();

  auto* walk = app.add_subcommand("walk", "principal pivoting walk to the sink");
  walk->add_option("--matrix", matrix_path)->required();
  walk->add_option("--q", q_path)->required();
  walk->add_option("--rule", rule, "least-index|random");
  walk->add_option("--seed", seed, "RNG seed (required for --rule random)");
  walk->add_option("--start", start_bits, "start vertex bit string")->required();

  auto* mclass = app.add_subcommand("matrix-class", "P/Z/K membership");
  mclass->add_option("--matrix", matrix_path)->required();

  auto* witness = app.add_subcommand(
      "witness", "local-uniformity violation witness for a non-K P-matrix");
  witness->add_option("--matrix", matrix_path)->required();

  auto* census = app.add_subcommand("census", "class tallies over USOs");
  census->add_option("--n", n)->required();
  census->add_flag("--enumerate", do_enumerate, "exhaustive sweep (n <= 3)");
  census->add_option("--sample-p", sample_p, "sample this many random P-instances");
  auto* census_seed = census->add_option("--seed", seed);
  census->add_option("--report", report_path, "report JSON output");

  auto* umcount = app.add_subcommand("umcount", "distinct USOs of a fixed matrix");
  umcount->add_option("--matrix", matrix_path)->required();
  umcount->add_option("--samples", samples)->required();
  umcount->add_option("--seed", seed)->required();
  umcount->add_flag("--exact-n2", exact_n2, "exact sector enumeration (n = 2)");

  auto* experiment = app.add_subcommand("experiment", "experiment harnesses");
  auto* kcount = experiment->add_subcommand("k-count", "distinct K-family USOs");
  kcount->add_option("--n", n)->required();
  kcount->add_option("--trials", trials)->required();
  kcount->add_option("--seed", seed)->required();

  auto* exdot = app.add_subcommand("export-dot", "orientation JSON to DOT");
  exdot->add_option("--in", in_path)->required();
  exdot->add_option("--out", out_path)->required();

  app.parse(argc, argv);

  if (gen->parsed()) {
    std::optional<uso::Orientation> phi;
    if (family == "uniform") {
      phi = uso::Orientation::uniform(n);
    } else if (family == "monotone") {
      if (!fpath.empty())
        phi = uso::monotone_uso(uso::monotone_from_json(uso::load_json_file(fpath)));
      else if (!antichain_path.empty())
        phi = uso::monotone_uso(
            uso::antichain_from_json(uso::load_json_file(antichain_path)));
      else
        throw CLI::ValidationError("gen --family monotone needs --f or --antichain");
    } else if (family == "k-beta") {
      auto beta = uso::beta_from_json(uso::load_json_file(beta_path));
      phi = uso::induced_orientation(uso::k_family_matrix(beta),
                                     uso::k_family_q(beta.dim()));
    } else {
      throw CLI::ValidationError("unknown family " + family);
    }
    write_orientation(*phi, out_path, dot_path);
    std::cout << "gen family=" << family << " n=" << phi->dim()
              << " out=" << out_path << "\n";
  } else if (check->parsed()) {
    auto phi = uso::orientation_from_json(uso::load_json_file(in_path));
    bool value;
    if (property == "uso") value = uso::is_uso(phi);
    else if (property == "acyclic") value = uso::is_acyclic(phi);
    else if (property == "locally-uniform") value = uso::is_locally_uniform(phi);
    else if (property == "holt-klee") value = uso::is_holt_klee(phi);
    else if (property == "strong-holt-klee") value = uso::is_strongly_holt_klee(phi);
    else throw CLI::ValidationError("unknown property " + property);
    std::cout << (value ? "true" : "false") << "\n";
  } else if (induce->parsed()) {
    auto M = uso::matrix_from_json(uso::load_json_file(matrix_path));
    auto q = uso::vector_from_json(uso::load_json_file(q_path));
    auto phi = uso::induced_orientation(M, q);
    write_orientation(phi, out_path, dot_path);
    std::cout << "induce n=" << phi.dim() << " out=" << out_path << "\n";
  } else if (solve->parsed()) {
    auto M = uso::matrix_from_json(uso::load_json_file(matrix_path));
    auto q = uso::vector_from_json(uso::load_json_file(q_path));
    auto sol = uso::solve_lcp(M, q);
    std::cout << "solve basis=" << uso::vertex_string(M.rows(), sol.basis)
              << " w=" << uso::vector_to_json(sol.w)["entries"].dump()
              << " z=" << uso::vector_to_json(sol.z)["entries"].dump() << "\n";
  } else if (walk->parsed()) {
    auto M = uso::matrix_from_json(uso::load_json_file(matrix_path));
    auto q = uso::vector_from_json(uso::load_json_file(q_path));
    uso::PivotRule r = uso::PivotRule::LeastIndex;
    if (rule == "random") {
      if (walk->count("--seed") == 0)
        throw CLI::ValidationError("--rule random requires --seed");
      r = uso::PivotRule::Random;
    } else if (rule != "least-index") {
      throw CLI::ValidationError("unknown rule " + rule);
    }
    auto start = uso::parse_vertex_string(start_bits, M.rows());
    auto path = uso::pivot_walk(M, q, uso::Vertex{M.rows(), start}, r, seed);
    std::cout << "walk length=" << path.size() - 1 << " path=";
    for (std::size_t i = 0; i < path.size(); ++i)
      std::cout << (i ? "," : "") << uso::vertex_string(M.rows(), path[i]);
    std::cout << "\n";
  } else if (mclass->parsed()) {
    auto M = uso::matrix_from_json(uso::load_json_file(matrix_path));
    bool p = uso::is_p_matrix(M), z = uso::is_z_matrix(M);
    std::cout << "matrix-class P=" << (p ? "true" : "false")
              << " Z=" << (z ? "true" : "false")
              << " K=" << (p && z ? "true" : "false") << "\n";
  } else if (witness->parsed()) {
    auto M = uso::matrix_from_json(uso::load_json_file(matrix_path));
    auto w = uso::local_uniformity_witness(M);
    if (!w) {
      std::cout << "witness none (K-matrix)\n";
    } else {
      std::cout << "witness i=" << w->i << " j=" << w->j
                << " q=" << uso::vector_to_json(w->q)["entries"].dump() << "\n";
    }
  } else if (census->parsed()) {
    if (do_enumerate == (sample_p >= 0))
      throw CLI::ValidationError("census needs exactly one of --enumerate / --sample-p");
    if (sample_p >= 0 && census_seed->count() == 0)
      throw CLI::ValidationError("census --sample-p requires --seed");
    uso::CensusReport rep = do_enumerate
                                ? uso::enumerate_usos(n)
                                : uso::census_sampled_p(n, sample_p, seed);
    nlohmann::json j{{"n", rep.n},
                     {"total", rep.total},
                     {"usos", rep.usos},
                     {"acyclic", rep.acyclic},
                     {"locally_uniform", rep.locally_uniform},
                     {"holt_klee", rep.holt_klee},
                     {"strongly_holt_klee", rep.strongly_holt_klee},
                     {"strong_hk_failures", rep.strong_hk_failures}};
    if (!report_path.empty()) uso::save_json_file(report_path, j);
    std::cout << "census " << j.dump() << "\n";
  } else if (umcount->parsed()) {
    auto M = uso::matrix_from_json(uso::load_json_file(matrix_path));
    auto res = uso::count_fixed_matrix_usos(M, samples, seed, exact_n2);
    std::cout << "umcount samples=" << res.samples << " distinct=" << res.distinct
              << " degenerate_skipped=" << res.degenerate_skipped;
    if (res.exact) std::cout << " exact=" << *res.exact;
    std::cout << "\n";
  } else if (kcount->parsed()) {
    auto res = uso::sample_k_usos(n, trials, seed);
    std::cout << "k-count n=" << n << " trials=" << res.trials
              << " distinct=" << res.distinct.size()
              << " degenerate_skipped=" << res.degenerate_skipped
              << " product_bound=" << uso::k_family_lower_bound(n) << "\n";
  } else if (exdot->parsed()) {
    auto phi = uso::orientation_from_json(uso::load_json_file(in_path));
    uso::save_text_file(out_path, uso::orientation_to_dot(phi));
    std::cout << "export-dot out=" << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unique-sink orientations of the n-cube from P-matrix LCPs"};
  try {
    return run(app, argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const uso::DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const uso::NotPMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const uso::NotUniqueSinkError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const uso::NotUsoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const uso::StepLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
