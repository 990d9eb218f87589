#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "rothlab/bounds.hpp"
#include "rothlab/census.hpp"
#include "rothlab/exact.hpp"
#include "rothlab/roth.hpp"
#include "rothlab/spectra.hpp"

using namespace rothlab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool matrix_close(const SymmetricMatrix& m, const std::vector<std::vector<double>>& p, double tol) {
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      if (std::abs(m(i, j) - p[i][j]) > tol) return false;
  return true;
}

// Least-squares scale of x onto p, then the largest residual.
double scaled_distance(std::span<const double> x, std::span<const double> p) {
  const double c = dot(x, p) / dot(x, x);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(c * x[i] - p[i]));
  return worst;
}

std::string row_text(const CensusRow& r) {
  std::ostringstream os;
  os << '(' << r.total << ", " << r.n_s_roth << ", " << r.n_harmcond << ", " << r.n_m_matrix << ", "
     << r.n_inv_positive << ')';
  return os.str();
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const CompositeInstance inst = fixtures::example1();
  const RothVerdict v = s_roth_oracle(inst);
  const SchurMatrix sm = build_q_mu(inst, v.mu);
  o.require(std::abs(v.mu - 0.63226) <= 5e-5, "mu");
  o.require(matrix_close(sm.q_mu, fixtures::kExample1QMu, 5e-4), "Q_mu entries");
  o.require(scaled_distance(v.eigenvector, fixtures::kExample1X) <= 1e-3, "eigenvector");
  const double dt = seconds_since(t0);
  o.require(dt < 1.0, "runtime");
  o.detail << (o.pass ? "" : "; ") << "mu=" << v.mu << ", " << dt << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const RothVerdict v2 = s_roth_oracle(fixtures::example2());
  const RothVerdict v3 = s_roth_oracle(fixtures::example3());
  const RothVerdict v4 = s_roth_oracle(fixtures::example4());
  o.require(std::abs(v2.mu - 0.82028) <= 5e-5, "second mu");
  o.require(std::abs(v3.mu - 1.0922) <= 5e-5, "third mu");
  o.require(std::abs(v4.mu - 0.67234) <= 5e-5, "fourth mu");

  const MatrixClassReport c2 = classify_q_mu(build_q_mu(fixtures::example2(), v2.mu));
  o.require(c2.m_matrix && c2.irreducible, "second Q_mu M-matrix");
  const HarmcondResult h2 = harmcond_check(fixtures::example2());
  o.require(!h2.holds && h2.witness && h2.witness->first == 0 && h2.witness->second == 1 &&
                h2.witness_sum == Rational(5, 6),
            "second harmonic witness");

  const MatrixClassReport c3 = classify_q_mu(build_q_mu(fixtures::example3(), v3.mu));
  bool inv_ok = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) inv_ok &= std::abs(c3.inverse(i, j) - fixtures::kExample3QMuInv[i][j]) <= 5e-4;
  o.require(inv_ok, "third inverse");

  const std::vector<double> w(v4.eigenvector.begin(), v4.eigenvector.begin() + 4);
  bool one_signed = true;
  for (double x : w) one_signed &= x * w[0] > 0.0;
  o.require(one_signed, "fourth w one-signed");
  o.require(scaled_distance(w, fixtures::kExample4W) <= 1e-3, "fourth w values");
  o.detail << (o.pass ? "" : "; ") << "mu=" << v2.mu << ", " << v3.mu << ", " << v4.mu;
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const CompositeInstance inst = fixtures::complete_bipartite_intra();
  const std::vector<std::int64_t> x{1, 1, 1, 1, 0, 0, -1, -1, -1, -1};
  o.require(exact_eigenvector_check(signless_laplacian(inst.h()), x, 2), "exact Q(H)x = 2x");
  const CompositeEigenpair ep = smallest_eigenpair(inst);
  o.require(std::abs(ep.mu - 2.0) <= 1e-9, "numerical mu");
  const RothVerdict v = s_roth_oracle(inst);
  o.require(!v.is_s_roth && v.reason == RothReason::ZeroEntry, "ZeroEntry verdict");
  const double dt = seconds_since(t0);
  o.require(dt < 1.0, "runtime");
  o.detail << (o.pass ? "" : "; ") << "mu=" << ep.mu << ", reason " << to_string(v.reason) << ", " << dt << " s";
  return o;
}

Outcome criterion4(bool long_run, const CensusResult& s5) {
  Outcome o;
  const CensusRow want5{5, 4, 558, 64, 4, 23, 35};
  const CensusRow want7{7, 4, 5375, 823, 85, 283, 515};
  const CensusRow want9{9, 4, 36677, 8403, 1234, 3155, 6054};
  o.require(s5.row == want5, "s=5 " + row_text(s5.row) + " vs " + row_text(want5));

  auto t0 = std::chrono::steady_clock::now();
  const CensusResult s7 = run_census(4, 7, Graph::complete(4));
  const double dt7 = seconds_since(t0);
  o.require(s7.row == want7, "s=7 " + row_text(s7.row) + " vs " + row_text(want7));
  o.require(dt7 < 900.0, "s=7 runtime");

  if (long_run) {
    t0 = std::chrono::steady_clock::now();
    CensusOptions opts;
    opts.allow_long = true;
    const CensusResult s9 = run_census(4, 9, Graph::complete(4), opts);
    o.require(s9.row == want9, "s=9 " + row_text(s9.row) + " vs " + row_text(want9));
    o.detail << (o.pass ? "" : "; ") << "s=9 " << row_text(s9.row) << " in " << seconds_since(t0) << " s; ";
  } else {
    o.detail << (o.pass ? "" : "; ");
  }
  o.detail << "s=5 " << row_text(s5.row) << ", s=7 " << row_text(s7.row) << " in " << dt7 << " s";
  return o;
}

Outcome criterion5(const CensusResult& s5) {
  Outcome o;
  std::size_t mismatch = 0, rmu_checked = 0, rmu_mismatch = 0;
  for (const ClassificationRecord& r : s5.records) {
    mismatch += r.s_roth != r.minpositive;
    if (r.rmu_rowsums) {
      ++rmu_checked;
      rmu_mismatch += *r.rmu_rowsums != r.s_roth;
    }
  }
  // every complete scaffold over all graphs on up to 7 vertices, s = 1..8
  for (std::size_t t = 2; t <= 7; ++t)
    for (const Graph& g : enumerate_graphs(t))
      for (std::size_t s = 1; s <= 8; ++s) {
        const CompositeInstance inst = compose(s, g);
        if (is_bipartite(inst.h())) continue;
        const RothVerdict v = s_roth_oracle(inst);
        mismatch += v.is_s_roth != classify_q_mu(build_q_mu(inst, v.mu)).minpositive;
        const ReducedMatrix rm = build_r_mu(inst, v.mu);
        if (!rm.positive_definite) continue;
        ++rmu_checked;
        rmu_mismatch += r_mu_rowsum_check(rm).s_roth != v.is_s_roth;
      }
  o.require(mismatch == 0, std::to_string(mismatch) + " minpositive discrepancies");
  o.require(rmu_mismatch == 0, std::to_string(rmu_mismatch) + " row-sum discrepancies");
  o.detail << (o.pass ? "" : "; ") << s5.records.size() << " census instances, " << rmu_checked
           << " positive definite R_mu";
  return o;
}

struct CertificateTally {
  std::size_t instances = 0;
  std::size_t hits = 0;
  std::size_t violations = 0;
  std::size_t steve_applicable = 0;
  std::size_t steve_mismatch = 0;
};

void tally(const CompositeInstance& inst, CertificateTally& c) {
  if (is_bipartite(inst.h())) return;
  const bool roth = s_roth_oracle(inst).is_s_roth;
  ++c.instances;
  const GdegCase gd = gdeg_check(inst);
  const bool predicted[] = {harmcond_check(inst).holds, gc_check(inst),     bdeg_check(inst), st_check(inst),
                            gd != GdegCase::None,        deg2_predicate(inst)};
  for (bool p : predicted)
    if (p) {
      ++c.hits;
      c.violations += !roth;
    }
  const SteveResult sr = steve_characterization(inst);
  if (sr.applicable) {
    ++c.steve_applicable;
    c.steve_mismatch += sr.s_roth != roth;
  }
}

Outcome criterion6() {
  Outcome o;
  CertificateTally c;
  const auto scaffolds = enumerate_connected_bipartite(4, 5);
  for (const Biadjacency& k : scaffolds) tally(compose(5, Graph::complete(4), k), c);

  Rng rng = split_rng(2024, 6);
  std::uniform_int_distribution<std::size_t> size(3, 9);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t s = size(rng), t = size(rng);
    if (i % 2 == 0) tally(fixtures::random_instance(s, t, rng), c);
    else tally(compose(s, fixtures::random_graph(t, std::uniform_real_distribution<double>(0.05, 0.9)(rng), rng)), c);
  }
  // joins with delta = t - s, where the joinee theorem applies
  for (std::size_t t = 3; t <= 7; ++t)
    for (const Graph& g : enumerate_graphs(t)) {
      const std::size_t d = g.min_degree();
      if (d == 0 || d >= t) continue;
      tally(compose(t - d, g), c);
    }
  o.require(c.violations == 0, std::to_string(c.violations) + " certificate violations");
  o.require(c.steve_mismatch == 0, std::to_string(c.steve_mismatch) + " joinee mismatches");
  o.require(c.steve_applicable > 0, "joinee theorem never applied");
  o.detail << (o.pass ? "" : "; ") << c.instances << " instances, " << c.hits << " certificate hits, "
           << c.steve_applicable << " joinee cases";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng = split_rng(2024, 7);
  std::size_t das = 0, mu2 = 0, mu4 = 0, span = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + rng() % 19;
    Graph g = fixtures::random_connected_graph(n, std::uniform_real_distribution<double>(0.0, 0.6)(rng), rng);
    const double mu = smallest_eigenpair(signless_laplacian(g)).mu;
    das += !(mu < static_cast<double>(g.min_degree()));
    mu2 += !(mu >= mu_lower_bound_degrees(g) - 1e-9);
    if (g.size() < n * (n - 1) / 2) {
      Vertex u = 0, v = 0;
      do {
        u = rng() % n;
        v = rng() % n;
      } while (u == v || g.has_edge(u, v));
      g.add_edge(u, v);
      span += !(smallest_eigenpair(signless_laplacian(g)).mu >= mu - 1e-9);
    }
    const CompositeInstance inst = fixtures::random_instance(2 + rng() % 8, 2 + rng() % 8, rng);
    mu4 += !(smallest_eigenpair(inst).mu <= mu_upper_bound_cut(inst) + 1e-9);
  }
  o.require(das == 0, "mu < delta");
  o.require(mu2 == 0, "2 delta - lambda lower bound");
  o.require(mu4 == 0, "4e/(s+t) upper bound");
  o.require(span == 0, "edge monotonicity");

  std::vector<std::size_t> ks;
  for (std::size_t k = 3; k <= 200; ++k) ks.push_back(k);
  std::vector<double> lambdas;
  for (int e = -20; e <= 20; ++e) lambdas.push_back(std::pow(10.0, e / 10.0));  // 0.01 .. 100
  lambdas.push_back(0.001);
  std::size_t bai_bad = 0;
  for (const SweepRow& r : cycle_sweep(ks, lambdas)) bai_bad += !r.ok;
  o.require(bai_bad == 0, std::to_string(bai_bad) + " cycle-block bound violations");

  double worst = 0.0;
  for (std::size_t k = 3; k <= 60; ++k)
    for (double lambda : {0.05, 0.5, 1.0, 2.0, 7.5})
      worst = std::max(worst, path_block_rowsums(k, 6.0, 6.0 - lambda).max_discrepancy);
  o.require(worst <= 1e-10, "rank-one row sums");

  std::size_t bg_bad = 0;
  for (const SweepRow& r : bai_golub_sweep(500, 40, 2024)) bg_bad += !r.ok;
  o.require(bg_bad == 0, std::to_string(bg_bad) + " trace bracket violations");

  o.detail << (o.pass ? "" : "; ") << "1000 graphs, " << ks.size() * lambdas.size()
           << " cycle blocks, row-sum discrepancy " << worst << ", 500 bracket checks";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const CompositeInstance c14 = compose(3, Graph::cycle(14));
  const RothVerdict v = s_roth_oracle(c14);
  o.require(!build_r_mu(c14, v.mu).positive_definite, "C14 R_mu singular");
  o.require(!v.is_s_roth, "C14 not S-Roth");
  o.require(!s_roth_oracle(compose(4, Graph::path(60))).is_s_roth, "s=4 P60 not S-Roth");
  o.require(s_roth_oracle(compose(6, Graph::path(60))).is_s_roth, "s=6 P60 S-Roth");
  std::size_t bad = 0;
  for (std::size_t k = 6; k <= 40; ++k) bad += !s_roth_oracle(compose(5, Graph::path(k))).is_s_roth;
  o.require(bad == 0, std::to_string(bad) + " s=5 paths not S-Roth");
  o.detail << (o.pass ? "" : "; ") << "C14 mu=" << v.mu;
  return o;
}

Outcome criterion9() {
  Outcome o;
  ConjectureOptions deg;
  deg.kind = ConjectureKind::MaxDeg;
  deg.s_min = 6;
  deg.s_max = 7;
  deg.t_min = 7;
  deg.t_max = 8;
  deg.exhaustive_t = 8;
  const ConjectureReport rd = conjecture_sweep(deg);

  ConjectureOptions tree;
  tree.kind = ConjectureKind::Tree;
  tree.s_min = 6;
  tree.s_max = 8;
  tree.t_min = 7;
  tree.t_max = 9;
  tree.exhaustive_t = 9;
  const ConjectureReport rt = conjecture_sweep(tree);

  o.require(rd.counterexamples.empty(), std::to_string(rd.counterexamples.size()) + " degree counterexamples");
  o.require(rt.counterexamples.empty(), std::to_string(rt.counterexamples.size()) + " tree counterexamples");
  o.detail << (o.pass ? "" : "; ") << rd.instances << " degree instances, " << rt.instances << " tree instances";
  if (!o.pass) {
    std::vector<Counterexample> all = rd.counterexamples;
    all.insert(all.end(), rt.counterexamples.begin(), rt.counterexamples.end());
    std::cerr << "counterexamples:\n";
    write_counterexamples_csv(std::cerr, all);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) long_run = true;
    else {
      std::cerr << "usage: acceptance [--long]\n";
      return 2;
    }
  }

  const CensusResult s5 = run_census(4, 5, Graph::complete(4));
  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, [&] { return criterion4(long_run, s5); }, [&] { return criterion5(s5); },
      criterion6, criterion7, criterion8, criterion9};

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail.str() << ")\n"
              << std::flush;
  }
  return failures == 0 ? 0 : 1;
}
