// groth: polynomial tables, crossing-diagram specializations, FK-graph
// listings, and the identity verification suites, on one exit-code contract:
// 0 clean, 1 a verified identity failed, 2 bad usage or bad input.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "groth/fkgraph.hpp"
#include "groth/json_io.hpp"
#include "groth/oracles.hpp"
#include "groth/perm.hpp"
#include "groth/specialize.hpp"
#include "groth/verify.hpp"

namespace {

using groth::FKGraph;
using groth::Json;
using groth::LaurentPoly;
using groth::Permutation;
using groth::VerificationReport;

// Subsets of C(D_v) are enumerated by bitmask; past 20 crossings the listing
// stops being something anyone scrolls through.
constexpr int kMaxListableCrossings = 20;

std::string graph_line(const FKGraph& g) {
  std::string out = "subset=[";
  for (std::size_t t = 0; t < g.subset.size(); ++t) {
    if (t) out += ",";
    out += "(" + std::to_string(g.subset[t].row) + "," + std::to_string(g.subset[t].col) + ")";
  }
  out += "] word=[";
  for (std::size_t t = 0; t < g.subset.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(g.subset[t].nu);
  }
  out += "] sign=";
  out += g.sign > 0 ? "+1" : "-1";
  out += " w=" + groth::to_string(g.result);
  out += " reduced=";
  out += g.reduced ? "yes" : "no";
  return out;
}

void print_poly(const LaurentPoly& f, const std::string& format) {
  if (format == "json")
    std::cout << groth::poly_to_json(f).dump(2) << "\n";
  else
    std::cout << groth::to_string(f) << "\n";
}

int default_jobs_from_env() {
  const char* env = std::getenv("GROTH_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long parsed = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || parsed < 1) {
    std::cerr << "warning: ignoring invalid GROTH_JOBS value \"" << env << "\"\n";
    return 1;
  }
  return static_cast<int>(parsed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grothendieck/Schubert specialization toolkit"};
  app.require_subcommand(1);

  std::string kind, w_str, v_str, format = "text", suite;
  int n = 0;
  bool reduced_only = false, render = false, show_graphs = false;
  long long sample = 0;
  std::uint64_t seed = 0;
  int jobs = 0;

  auto* compute = app.add_subcommand("compute", "Print one oracle-table polynomial");
  compute->add_option("kind", kind, "schubert or grothendieck")
      ->required()
      ->check(CLI::IsMember({"schubert", "grothendieck"}));
  compute->add_option("--w", w_str, "permutation (one-line window)")->required();
  auto* compute_n = compute->add_option("--n", n, "table size (default: window size)");
  compute->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* specialize = app.add_subcommand("specialize", "Specialize at a rearranged alphabet");
  specialize->add_option("--kind", kind, "schubert or grothendieck")
      ->required()
      ->check(CLI::IsMember({"schubert", "grothendieck"}));
  specialize->add_option("--w", w_str, "coefficient permutation")->required();
  specialize->add_option("--v", v_str, "specializing permutation")->required();
  specialize->add_flag("--show-graphs", show_graphs, "list and draw the contributing FK-graphs");
  specialize->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* fk = app.add_subcommand("fk-graphs", "Enumerate FK-graphs inside C(D_v)");
  fk->add_option("--v", v_str, "diagram permutation")->required();
  auto* fk_w = fk->add_option("--w", w_str, "keep only graphs with this w(D)");
  fk->add_flag("--reduced", reduced_only, "keep only reduced graphs");
  fk->add_flag("--render", render, "draw each graph");
  fk->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run an identity sweep");
  std::vector<std::string> suite_choices = groth::suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "which identity family to sweep")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--n", n, "symmetric group size")->default_val(3);
  auto* verify_sample =
      verify->add_option("--sample", sample, "check this many seeded pairs instead")
          ->check(CLI::PositiveNumber);
  auto* verify_seed = verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--jobs", jobs, "worker threads (default: GROTH_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) {
      const Permutation w = groth::parse_permutation(w_str);
      if (compute_n->count() == 0) n = w.size();
      if (n < w.size()) throw std::invalid_argument("--n is smaller than the window of --w");
      const groth::PolyTable table =
          kind == "schubert" ? groth::schubert_table(n) : groth::grothendieck_table_ab(n);
      print_poly(table.entries.at(w.embed(n)), format);
      return 0;
    }

    if (*specialize) {
      if (show_graphs && format == "json")
        throw std::invalid_argument("--show-graphs is text-only");
      Permutation w = groth::parse_permutation(w_str);
      Permutation v = groth::parse_permutation(v_str);
      const int size = std::max(w.size(), v.size());
      w = w.embed(size);
      v = v.embed(size);
      const LaurentPoly result = kind == "schubert" ? groth::schubert_specialization(v, w)
                                                    : groth::theorem_lhs(v, w);
      print_poly(result, format);
      if (show_graphs) {
        const groth::CrossingDiagram diag = groth::crossing_diagram(v);
        if (static_cast<int>(diag.crossings.size()) > kMaxListableCrossings)
          throw std::invalid_argument("C(D_v) is too large to enumerate");
        for (std::uint64_t mask = 0; mask < (1ull << diag.crossings.size()); ++mask) {
          const FKGraph g = groth::classify_mask(diag, mask);
          if (!(g.result == w)) continue;
          if (kind == "schubert" && !g.reduced) continue;
          std::cout << graph_line(g) << "\n"
                    << groth::render_ascii(diag, &g.subset);
        }
      }
      return 0;
    }

    if (*fk) {
      const Permutation v = groth::parse_permutation(v_str);
      std::optional<Permutation> target;
      if (fk_w->count()) {
        Permutation w = groth::parse_permutation(w_str);
        if (w.size() > v.size())
          throw std::invalid_argument("--w does not fit inside S_n for --v");
        target = w.embed(v.size());
      }
      if (render && format == "json") throw std::invalid_argument("--render is text-only");
      const groth::CrossingDiagram diag = groth::crossing_diagram(v);
      if (static_cast<int>(diag.crossings.size()) > kMaxListableCrossings)
        throw std::invalid_argument("C(D_v) is too large to enumerate");
      Json listing = Json::array();
      for (std::uint64_t mask = 0; mask < (1ull << diag.crossings.size()); ++mask) {
        const FKGraph g = groth::classify_mask(diag, mask);
        if (target && !(g.result == *target)) continue;
        if (reduced_only && !g.reduced) continue;
        if (format == "json") {
          listing.push_back(groth::fkgraph_to_json(g));
        } else {
          std::cout << graph_line(g) << "\n";
          if (render) std::cout << groth::render_ascii(diag, &g.subset);
        }
      }
      if (format == "json") std::cout << listing.dump(2) << "\n";
      return 0;
    }

    // verify
    std::optional<long long> sample_opt;
    if (verify_sample->count()) sample_opt = sample;
    std::optional<std::uint64_t> seed_opt;
    if (verify_seed->count()) seed_opt = seed;
    if (sample_opt && suite != "theorem")
      throw std::invalid_argument("--sample only applies to the theorem suite");
    if (jobs == 0) jobs = default_jobs_from_env();

    std::vector<VerificationReport> reports;
    if (suite == "all") {
      for (const std::string& name : groth::suite_names())
        reports.push_back(groth::run_suite(name, std::min(n, groth::suite_cap(name)),
                                           std::nullopt, seed_opt, jobs));
    } else {
      if (n > groth::suite_cap(suite))
        throw std::invalid_argument("suite " + suite + " supports n <= " +
                                    std::to_string(groth::suite_cap(suite)));
      reports.push_back(groth::run_suite(suite, n, sample_opt, seed_opt, jobs));
    }

    bool all_passed = true;
    Json json_reports = Json::array();
    for (const VerificationReport& r : reports) {
      all_passed = all_passed && r.passed();
      std::cerr << "suite " << r.suite << " elapsed " << r.elapsed_sec << "s\n";
      if (format == "json")
        json_reports.push_back(groth::report_to_json(r));
      else
        std::cout << groth::report_text(r);
    }
    if (format == "json")
      std::cout << (reports.size() == 1 ? json_reports[0] : json_reports).dump(2) << "\n";
    return all_passed ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
