// rothlab: command-line front end for S-Roth analysis.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rothlab/bounds.hpp"
#include "rothlab/census.hpp"
#include "rothlab/graph6.hpp"
#include "rothlab/report.hpp"
#include "rothlab/spectra.hpp"

using namespace rothlab;

namespace {

constexpr int kExitRoth = 0;
constexpr int kExitError = 1;
constexpr int kExitNotRoth = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// graph6 when the first content line is a single token, edge list otherwise.
Graph read_graph(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  if (format == "graph6") return parse_graph6(text);
  if (format == "edges") return parse_edge_list(text);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.rfind(">>graph6<<", 0) == 0) return parse_graph6(text);
    const auto last = line.find_last_not_of(" \t\r");
    const bool single_token = line.substr(first, last - first + 1).find_first_of(" \t") == std::string::npos;
    return single_token ? parse_graph6(line) : parse_edge_list(text);
  }
  return parse_edge_list(text);
}

// K4, C6, P60, E3, or a graph6 string.
Graph named_graph(const std::string& name) {
  if (name.size() >= 2 && std::isdigit(static_cast<unsigned char>(name[1]))) {
    const std::size_t n = std::stoul(name.substr(1));
    switch (name[0]) {
      case 'K': return Graph::complete(n);
      case 'C': return Graph::cycle(n);
      case 'P': return Graph::path(n);
      case 'E': return Graph::empty(n);
      default: break;
    }
  }
  return parse_graph6(name);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const std::size_t v = std::stoul(text);
    return {v, v};
  }
  return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
}

int default_jobs() {
  if (const char* env = std::getenv("ROTHLAB_JOBS")) return std::atoi(env);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-Roth analysis of graphs built on a bipartite scaffold"};
  app.require_subcommand(1);
  int jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads (0: all; ROTHLAB_JOBS sets the default)");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "report on one instance as JSON");
  std::string input, format = "auto", s_list;
  std::size_t complete_s = 0;
  analyze_cmd->add_option("input", input, "graph6 or edge-list file")->required();
  analyze_cmd->add_option("--format", format, "auto, graph6 or edges")->check(CLI::IsMember({"auto", "graph6", "edges"}));
  auto* s_opt = analyze_cmd->add_option("--s-vertices", s_list, "comma-separated S vertices of the input graph H");
  auto* c_opt = analyze_cmd->add_option("--complete-scaffold", complete_s, "input is G; analyze K_s-bar join G");
  s_opt->excludes(c_opt);

  // census
  auto* census_cmd = app.add_subcommand("census", "classify every connected scaffold for one (t, s)");
  std::size_t census_t = 4, census_s = 5;
  std::string census_g = "K4", out_path, records_path, cache_dir;
  bool resume = false, allow_long = false, require_maximal = false;
  census_cmd->add_option("--t", census_t, "size of T")->required();
  census_cmd->add_option("--s", census_s, "size of S")->required();
  census_cmd->add_option("--g", census_g, "intra graph on T: K4, C4, P4, E4 or graph6 (default K<t>)");
  census_cmd->add_option("--out", out_path, "append the summary row to this CSV");
  census_cmd->add_option("--records", records_path, "write per-scaffold flags to this CSV");
  census_cmd->add_option("--cache-dir", cache_dir, "scaffold cache directory");
  census_cmd->add_flag("--resume", resume, "reuse the scaffold cache when present");
  census_cmd->add_flag("--allow-long", allow_long, "lift the t*s limit on exhaustive enumeration");
  census_cmd->add_flag("--require-maximal", require_maximal, "skip scaffolds where S is not maximal independent");

  // noise
  auto* noise_cmd = app.add_subcommand("noise", "recovery rate of the planted bipartition under random noise");
  std::size_t noise_s = 17, noise_t = 5, deletions = 0, additions = 0, trials = 100;
  std::uint64_t seed = 1;
  noise_cmd->add_option("--s", noise_s)->required();
  noise_cmd->add_option("--t", noise_t)->required();
  noise_cmd->add_option("--deletions", deletions);
  noise_cmd->add_option("--additions", additions);
  noise_cmd->add_option("--trials", trials);
  noise_cmd->add_option("--seed", seed);

  // conjecture
  auto* conj_cmd = app.add_subcommand("conjecture", "search for counterexamples over K_s-bar join G");
  std::string kind = "maxdeg", s_range = "6:7", t_range = "7:8";
  bool relaxed = false;
  std::size_t samples = 200, exhaustive_t = 0;
  std::uint64_t conj_seed = 1;
  conj_cmd->add_option("--kind", kind)->check(CLI::IsMember({"tree", "maxdeg"}));
  conj_cmd->add_option("--s-range", s_range, "lo:hi");
  conj_cmd->add_option("--t-range", t_range, "lo:hi");
  conj_cmd->add_flag("--relaxed", relaxed, "drop the t > s >= 6 hypothesis");
  conj_cmd->add_option("--samples", samples, "graphs sampled per (s, t) beyond the exhaustive range");
  conj_cmd->add_option("--exhaustive-t", exhaustive_t, "largest t enumerated exhaustively (default 8 maxdeg, 11 tree)");
  conj_cmd->add_option("--seed", conj_seed);
  std::string graphs_path;
  conj_cmd->add_option("--graphs", graphs_path, "check the graph6 graphs in this file instead of generating a family");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "inverse-matrix bound sweeps as CSV");
  std::string sweep = "cycle";
  std::size_t k_max = 60, count = 500;
  std::vector<double> lambdas{2.1, 3.0, 5.0, 10.0};
  double bounds_s = 6.0;
  std::optional<double> bounds_mu;
  std::uint64_t bounds_seed = 1;
  bounds_cmd->add_option("--sweep", sweep)->check(CLI::IsMember({"cycle", "path", "baigolub"}));
  bounds_cmd->add_option("--k-max", k_max, "largest block order");
  bounds_cmd->add_option("--lambda", lambdas, "shifts for the cycle sweep");
  bounds_cmd->add_option("--s", bounds_s, "s for the path sweep");
  bounds_cmd->add_option("--mu", bounds_mu, "fixed mu for the path sweep (default: mu of K_s-bar join P_k)");
  bounds_cmd->add_option("--count", count, "random matrices for the Bai-Golub sweep");
  bounds_cmd->add_option("--seed", bounds_seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      const Graph g = read_graph(input, format);
      CompositeInstance inst = [&] {
        if (*c_opt) return compose(complete_s, g);
        if (!*s_opt) throw std::runtime_error("analyze needs --s-vertices or --complete-scaffold");
        VertexSet s;
        std::istringstream ss(s_list);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) s.push_back(std::stoul(tok));
        return from_graph(g, s);
      }();
      const AnalysisReport rep = analyze(inst);
      std::cout << to_json(rep).dump(2) << '\n';
      return rep.verdict.is_s_roth ? kExitRoth : kExitNotRoth;
    }

    if (*census_cmd) {
      CensusOptions opts;
      opts.allow_long = allow_long;
      opts.require_maximal = require_maximal;
      opts.jobs = jobs;
      opts.resume = resume;
      opts.cache_dir = cache_dir.empty() && resume ? "." : cache_dir;
      const Graph g = census_cmd->count("--g") ? named_graph(census_g) : Graph::complete(census_t);
      const CensusResult res = run_census(census_t, census_s, g, opts);
      if (res.excluded_non_maximal > 0)
        std::cerr << "excluded " << res.excluded_non_maximal << " scaffolds with S not maximal\n";
      if (!out_path.empty()) {
        const bool fresh = !std::filesystem::exists(out_path) || std::filesystem::file_size(out_path) == 0;
        std::ofstream os(out_path, std::ios::app);
        write_census_csv(os, {res.row}, fresh);
        std::cout << out_path << '\n';
      } else {
        write_census_csv(std::cout, {res.row});
      }
      if (!records_path.empty()) {
        std::ofstream os(records_path);
        os << "scaffold,mu,multiplicity,s_roth,reason,harmcond,gc,bdeg,st,z_matrix,m_matrix,reducible_m_matrix,"
              "inv_positive,minpositive,near_zero_inverse\n";
        os.precision(12);
        for (const auto& r : res.records)
          os << r.scaffold_g6 << ',' << r.mu << ',' << r.multiplicity << ',' << r.s_roth << ',' << to_string(r.reason)
             << ',' << r.harmcond << ',' << r.gc << ',' << r.bdeg << ',' << r.st << ',' << r.z_matrix << ','
             << r.m_matrix << ',' << r.reducible_m_matrix << ',' << r.inverse_positive << ',' << r.minpositive
             << ',' << r.near_zero_inverse_entries << '\n';
      }
      return 0;
    }

    if (*noise_cmd) {
      const NoiseReport rep = run_noise_trials(noise_s, noise_t, deletions, additions, trials, seed, jobs);
      std::cout << "s,t,deletions,additions,trials,recovered,rate,seed\n"
                << rep.s << ',' << rep.t << ',' << rep.deletions << ',' << rep.additions << ',' << rep.trials << ','
                << rep.recovered << ',' << rep.rate() << ',' << rep.seed << '\n';
      return 0;
    }

    if (*conj_cmd) {
      ConjectureOptions opts;
      opts.kind = parse_conjecture_kind(kind);
      std::tie(opts.s_min, opts.s_max) = parse_range(s_range);
      std::tie(opts.t_min, opts.t_max) = parse_range(t_range);
      opts.relaxed = relaxed;
      opts.samples = samples;
      opts.seed = conj_seed;
      opts.jobs = jobs;
      opts.exhaustive_t = exhaustive_t > 0 ? exhaustive_t : (opts.kind == ConjectureKind::Tree ? 11 : 8);
      ConjectureReport rep;
      if (graphs_path.empty()) {
        rep = conjecture_sweep(opts);
      } else {
        std::istringstream lines(read_file(graphs_path));
        std::string line;
        while (std::getline(lines, line)) {
          if (line.empty() || line[0] == '#') continue;
          const Graph g = parse_graph6(line);
          for (std::size_t s = opts.s_min; s <= opts.s_max; ++s) {
            if (!opts.relaxed && !(g.order() > s && s >= 6)) continue;
            ++rep.instances;
            if (auto c = check_conjecture_instance(opts.kind, s, g)) rep.counterexamples.push_back(*c);
          }
        }
      }
      write_counterexamples_csv(std::cout, rep.counterexamples);
      std::cerr << rep.instances << " instances, " << rep.counterexamples.size() << " counterexamples\n";
      return rep.counterexamples.empty() ? 0 : kExitNotRoth;
    }

    if (*bounds_cmd) {
      std::vector<SweepRow> rows;
      if (sweep == "cycle") {
        std::vector<std::size_t> ks;
        for (std::size_t k = 3; k <= k_max; ++k) ks.push_back(k);
        rows = cycle_sweep(ks, lambdas);
      } else if (sweep == "path") {
        for (std::size_t k = 3; k <= k_max; ++k) {
          const double mu = bounds_mu ? *bounds_mu
                                      : smallest_eigenpair(compose(static_cast<std::size_t>(bounds_s), Graph::path(k))).mu;
          const auto part = path_sweep(bounds_s, mu, {k});
          rows.insert(rows.end(), part.begin(), part.end());
        }
      } else {
        rows = bai_golub_sweep(count, k_max, bounds_seed);
      }
      write_sweep_csv(std::cout, rows);
      const bool ok = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.ok; });
      return ok ? 0 : kExitNotRoth;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
