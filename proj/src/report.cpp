#include "rothlab/report.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rothlab/rng.hpp"
#include "rothlab/spectra.hpp"

namespace rothlab {

AnalysisReport analyze(const CompositeInstance& inst) {
  AnalysisReport r{.instance = inst, .verdict = s_roth_oracle(inst)};
  const std::size_t t = inst.t();
  r.w.assign(r.verdict.eigenvector.begin(), r.verdict.eigenvector.begin() + static_cast<std::ptrdiff_t>(t));
  r.z.assign(r.verdict.eigenvector.begin() + static_cast<std::ptrdiff_t>(t), r.verdict.eigenvector.end());

  r.harmcond = harmcond_check(inst);
  r.gc = gc_check(inst);
  r.bdeg = bdeg_check(inst);
  r.st = st_check(inst);
  r.gdeg = gdeg_check(inst);
  r.steve = steve_characterization(inst);
  r.deg2 = deg2_predicate(inst);

  const double mu = r.verdict.mu;
  try {
    r.q_mu_class = classify_q_mu(build_q_mu(inst, mu));
  } catch (const RothError&) {
    r.q_mu_class.reset();
  }
  r.lower_bound = mu_lower_bound_degrees(inst.h());
  r.upper_bound = mu_upper_bound_cut(inst);

  if (inst.complete_scaffold()) {
    if (mu < static_cast<double>(t)) r.alpha = alpha_of(inst, mu);
    const ReducedMatrix rm = build_r_mu(inst, mu);
    if (rm.positive_definite) r.rmu_rowsums = r_mu_rowsum_check(rm).s_roth;
  }
  return r;
}

nlohmann::json to_json(const AnalysisReport& r) {
  using nlohmann::json;
  const auto& inst = r.instance;
  json j;
  j["instance"] = json::parse(to_json(inst));
  j["mu"] = r.verdict.mu;
  j["mu_exact"] = r.verdict.mu_exact;
  j["multiplicity"] = r.verdict.multiplicity;
  j["eigenvector"] = r.verdict.eigenvector;
  j["w"] = r.w;
  j["z"] = r.z;
  j["s_roth"] = r.verdict.is_s_roth;
  j["reason"] = std::string(to_string(r.verdict.reason));

  json hc{{"holds", r.harmcond.holds}};
  if (r.harmcond.witness) {
    hc["witness"] = {r.harmcond.witness->first, r.harmcond.witness->second};
    hc["witness_sum"] = r.harmcond.witness_sum.str();
    hc["witness_adjacent"] = r.harmcond.witness_adjacent;
  }
  json cert{{"harmcond", hc}, {"gc", r.gc}, {"bdeg", r.bdeg}, {"st", r.st},
            {"gdeg", std::string(to_string(r.gdeg))}, {"deg2", r.deg2}};
  if (r.steve.applicable) {
    json sv{{"s_roth", r.steve.s_roth}};
    if (r.steve.witness) sv["witness"] = *r.steve.witness;
    cert["steve"] = sv;
  } else {
    cert["steve"] = nullptr;
  }
  j["certificates"] = cert;

  if (r.q_mu_class) {
    const auto& c = *r.q_mu_class;
    j["q_mu"] = {{"z_matrix", c.z_matrix},
                 {"positive_definite", c.positive_definite},
                 {"m_matrix", c.m_matrix},
                 {"irreducible", c.irreducible},
                 {"inverse_positive", c.inverse_positive},
                 {"minpositive", c.minpositive},
                 {"near_zero_inverse_entries", c.near_zero_inverse_entries}};
  } else {
    j["q_mu"] = nullptr;
  }
  j["bounds"] = {{"lower_2delta_minus_lambda", r.lower_bound}, {"upper_4e_over_n", r.upper_bound}};
  j["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
  j["rmu_rowsums_positive"] = r.rmu_rowsums ? json(*r.rmu_rowsums) : json(nullptr);
  return j;
}

NoiseReport run_noise_trials(std::size_t s, std::size_t t, std::size_t deletions, std::size_t additions,
                             std::size_t trials, std::uint64_t seed, int jobs) {
  const CompositeInstance base = compose(s, Graph::empty(t));
  std::vector<char> ok(trials, 0);
  std::vector<std::exception_ptr> errors(trials);
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
  (void)jobs;
#endif
  for (std::size_t i = 0; i < trials; ++i) {
    try {
      const auto ops = sample_noise(base, deletions, additions, splitmix64(seed + i));
      ok[i] = s_roth_oracle(apply_noise(base, ops)).is_s_roth ? 1 : 0;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  NoiseReport rep{s, t, deletions, additions, trials, 0, seed};
  for (char c : ok) rep.recovered += c;
  return rep;
}

}  // namespace rothlab
