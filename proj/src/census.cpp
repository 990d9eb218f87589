#include "rothlab/census.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <ostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rothlab/graph6.hpp"
#include "rothlab/rng.hpp"

namespace rothlab {

ClassificationRecord classify_instance(const Biadjacency& k, const Graph& g) {
  const CompositeInstance inst = compose(k.cols(), g, k);
  if (is_bipartite(inst.h())) throw CensusError("classify_instance: H is bipartite");

  ClassificationRecord r;
  r.scaffold_g6 = emit_graph6(inst.scaffold());
  r.s = inst.s();
  r.t = inst.t();
  r.s_maximal = inst.s_maximal();

  const RothVerdict v = s_roth_oracle(inst);
  r.mu = v.mu;
  r.mu_exact = v.mu_exact;
  r.multiplicity = v.multiplicity;
  r.s_roth = v.is_s_roth;
  r.reason = v.reason;

  r.harmcond = harmcond_check(inst).holds;
  r.gc = gc_check(inst);
  r.bdeg = bdeg_check(inst);
  r.st = st_check(inst);

  const MatrixClassReport cr = classify_q_mu(build_q_mu(inst, v.mu));
  r.z_matrix = cr.z_matrix;
  r.m_matrix = cr.m_matrix && cr.irreducible;
  r.reducible_m_matrix = cr.m_matrix && !cr.irreducible;
  r.inverse_positive = cr.inverse_positive;
  r.minpositive = cr.minpositive;
  r.near_zero_inverse_entries = cr.near_zero_inverse_entries;

  if (inst.complete_scaffold()) {
    const ReducedMatrix rm = build_r_mu(inst, v.mu);
    if (rm.positive_definite) r.rmu_rowsums = r_mu_rowsum_check(rm).s_roth;
  }
  return r;
}

std::filesystem::path scaffold_cache_path(const std::filesystem::path& dir, std::size_t t, std::size_t s) {
  return dir / ("bipartite_t" + std::to_string(t) + "_s" + std::to_string(s) + ".g6");
}

std::vector<Biadjacency> load_scaffolds(std::size_t t, std::size_t s, const CensusOptions& opts) {
  std::vector<Biadjacency> out;
  const bool cached = !opts.cache_dir.empty();
  const auto path = cached ? scaffold_cache_path(opts.cache_dir, t, s) : std::filesystem::path{};
  if (cached && opts.resume && std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Graph b = parse_graph6(line);
      if (b.order() != t + s) throw CensusError("scaffold cache " + path.string() + " has a graph of the wrong order");
      out.push_back(scaffold_from_graph(b, t));
    }
    return out;
  }
  for_each_connected_bipartite({t, s, opts.allow_long, false}, [&](const Biadjacency& k) { out.push_back(k); });
  if (cached) {
    std::filesystem::create_directories(opts.cache_dir);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream os(tmp);
      for (const auto& k : out) os << emit_graph6(scaffold_graph(k)) << '\n';
      if (!os) throw CensusError("cannot write scaffold cache " + tmp);
    }
    std::filesystem::rename(tmp, path);
  }
  return out;
}

CensusRow aggregate(std::size_t t, std::size_t s, const std::vector<ClassificationRecord>& records) {
  CensusRow row{s, t, records.size(), 0, 0, 0, 0};
  for (const auto& r : records) {
    row.n_s_roth += r.s_roth;
    row.n_harmcond += r.harmcond;
    row.n_m_matrix += r.m_matrix;
    row.n_inv_positive += r.inverse_positive;
  }
  return row;
}

namespace {

CensusResult finish(std::size_t t, std::size_t s, std::vector<ClassificationRecord> all, const CensusOptions& opts) {
  CensusResult res;
  for (auto& r : all) {
    if (opts.require_maximal && !r.s_maximal) {
      ++res.excluded_non_maximal;
      continue;
    }
    res.records.push_back(std::move(r));
  }
  res.row = aggregate(t, s, res.records);
  return res;
}

}  // namespace

CensusResult run_census_serial(std::size_t t, std::size_t s, const Graph& g, const CensusOptions& opts) {
  if (g.order() != t) throw CensusError("run_census: G must have t vertices");
  const auto scaffolds = load_scaffolds(t, s, opts);
  std::vector<ClassificationRecord> all;
  all.reserve(scaffolds.size());
  for (const auto& k : scaffolds) all.push_back(classify_instance(k, g));
  return finish(t, s, std::move(all), opts);
}

CensusResult run_census(std::size_t t, std::size_t s, const Graph& g, const CensusOptions& opts) {
  if (g.order() != t) throw CensusError("run_census: G must have t vertices");
  const auto scaffolds = load_scaffolds(t, s, opts);
  const std::size_t n = scaffolds.size();
  std::vector<ClassificationRecord> all(n);
  std::vector<std::exception_ptr> errors(n);
#ifdef _OPENMP
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
  for (std::size_t i = 0; i < n; ++i) {
    try {
      all[i] = classify_instance(scaffolds[i], g);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return finish(t, s, std::move(all), opts);
}

void write_census_csv(std::ostream& os, const std::vector<CensusRow>& rows, bool header) {
  if (header) os << "s,total,s_roth,harmcond,m_matrix,inv_positive\n";
  for (const auto& r : rows)
    os << r.s << ',' << r.total << ',' << r.n_s_roth << ',' << r.n_harmcond << ',' << r.n_m_matrix << ','
       << r.n_inv_positive << '\n';
}

std::string_view to_string(ConjectureKind k) { return k == ConjectureKind::Tree ? "tree" : "maxdeg"; }

ConjectureKind parse_conjecture_kind(std::string_view name) {
  if (name == "tree") return ConjectureKind::Tree;
  if (name == "maxdeg") return ConjectureKind::MaxDeg;
  throw CensusError("unknown conjecture kind: " + std::string(name));
}

bool in_conjecture_family(ConjectureKind kind, std::size_t s, const Graph& g) {
  if (kind == ConjectureKind::MaxDeg) return g.max_degree() < s;
  return g.order() > 0 && g.size() + 1 == g.order() && is_connected(g) && g.max_degree() <= s;
}

std::optional<Counterexample> check_conjecture_instance(ConjectureKind kind, std::size_t s, const Graph& g) {
  if (!in_conjecture_family(kind, s, g)) return std::nullopt;
  const RothVerdict v = s_roth_oracle(compose(s, g));
  if (v.is_s_roth) return std::nullopt;
  return Counterexample{kind, s, g.order(), emit_graph6(g), v.mu, v.reason};
}

namespace {

// Random labelled tree with maximum degree <= cap, by Pruefer rejection.
Graph random_tree(std::size_t n, std::size_t cap, Rng& rng) {
  if (n <= 2) return Graph::path(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (true) {
    std::vector<std::size_t> code(n - 2);
    std::vector<std::size_t> deg(n, 1);
    for (auto& c : code) ++deg[c = pick(rng)];
    if (*std::max_element(deg.begin(), deg.end()) > cap) continue;
    Graph g(n);
    for (std::size_t c : code) {
      std::size_t leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      g.add_edge(leaf, c);
      --deg[leaf];
      --deg[c];
    }
    std::size_t u = n, v = n;
    for (std::size_t x = 0; x < n; ++x)
      if (deg[x] == 1) (u == n ? u : v) = x;
    g.add_edge(u, v);
    return g;
  }
}

// Random graph with maximum degree < s: a random prefix of a shuffled pair list, greedily capped.
Graph random_bounded_graph(std::size_t n, std::size_t s, Rng& rng) {
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const std::size_t target = std::uniform_int_distribution<std::size_t>(0, pairs.size())(rng);
  Graph g(n);
  for (std::size_t i = 0; i < target; ++i) {
    const auto [u, v] = pairs[i];
    if (g.degree(u) + 1 < s && g.degree(v) + 1 < s) g.add_edge(u, v);
  }
  return g;
}

std::vector<Graph> conjecture_family(const ConjectureOptions& opts, std::size_t s, std::size_t t) {
  std::vector<Graph> family;
  if (t <= opts.exhaustive_t) {
    family = opts.kind == ConjectureKind::Tree ? enumerate_trees(t) : enumerate_graphs(t);
  } else {
    Rng rng = split_rng(opts.seed, s * 1000 + t);
    for (std::size_t i = 0; i < opts.samples; ++i)
      family.push_back(opts.kind == ConjectureKind::Tree ? random_tree(t, s, rng) : random_bounded_graph(t, s, rng));
  }
  std::erase_if(family, [&](const Graph& g) { return !in_conjecture_family(opts.kind, s, g); });
  return family;
}

}  // namespace

ConjectureReport conjecture_sweep(const ConjectureOptions& opts) {
  ConjectureReport report;
  for (std::size_t s = opts.s_min; s <= opts.s_max; ++s) {
    for (std::size_t t = opts.t_min; t <= opts.t_max; ++t) {
      if (!opts.relaxed && !(t > s && s >= 6)) continue;
      const auto family = conjecture_family(opts, s, t);
      std::vector<std::optional<Counterexample>> found(family.size());
      std::vector<std::exception_ptr> errors(family.size());
#ifdef _OPENMP
      const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#endif
      for (std::size_t i = 0; i < family.size(); ++i) {
        try {
          found[i] = check_conjecture_instance(opts.kind, s, family[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
      for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
      report.instances += family.size();
      for (auto& f : found)
        if (f) report.counterexamples.push_back(std::move(*f));
    }
  }
  return report;
}

void write_counterexamples_csv(std::ostream& os, const std::vector<Counterexample>& rows) {
  os << "kind,s,t,g6,mu,reason\n";
  os.precision(12);
  for (const auto& c : rows)
    os << to_string(c.kind) << ',' << c.s << ',' << c.t << ',' << c.g6 << ',' << c.mu << ',' << to_string(c.reason)
       << '\n';
}

UltraRothReport ultra_roth_probe(const Biadjacency& k, const std::vector<Graph>& family) {
  UltraRothReport report;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const RothVerdict v = s_roth_oracle(compose(k.cols(), family[i], k));
    if (!v.is_s_roth) report.failures.push_back({i, emit_graph6(family[i]), v.reason});
  }
  report.all_s_roth = report.failures.empty();
  return report;
}

Biadjacency complete_minus_edge(std::size_t t, std::size_t s) {
  Biadjacency k(t, s, true);
  k.set(0, 0, false);
  return k;
}

}  // namespace rothlab
