#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "rothlab/composite.hpp"
#include "rothlab/roth.hpp"

namespace rothlab {

/// Everything the analyze command prints about one instance.
struct AnalysisReport {
  CompositeInstance instance;
  RothVerdict verdict;
  Vector w{};  ///< eigenvector on T
  Vector z{};  ///< eigenvector on S
  HarmcondResult harmcond{};
  bool gc = false;
  bool bdeg = false;
  bool st = false;
  GdegCase gdeg = GdegCase::None;
  SteveResult steve{};
  bool deg2 = false;
  /// Absent when Q_mu is not positive definite (bipartite H).
  std::optional<MatrixClassReport> q_mu_class{};
  double lower_bound = 0.0;  ///< 2 delta(H) - lambda_max(L(H))
  double upper_bound = 0.0;  ///< 4 e(G) / (s + t)
  std::optional<double> alpha{};
  std::optional<bool> rmu_rowsums{};
};

AnalysisReport analyze(const CompositeInstance& inst);
nlohmann::json to_json(const AnalysisReport& r);

struct NoiseReport {
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t deletions = 0;
  std::size_t additions = 0;
  std::size_t trials = 0;
  std::size_t recovered = 0;
  std::uint64_t seed = 0;
  double rate() const { return trials == 0 ? 1.0 : static_cast<double>(recovered) / static_cast<double>(trials); }
};

/// Starts each trial from K_{s,t}, applies seeded random noise, and counts
/// trials where the smallest eigenvector still separates S from T.
NoiseReport run_noise_trials(std::size_t s, std::size_t t, std::size_t deletions, std::size_t additions,
                             std::size_t trials, std::uint64_t seed, int jobs = 0);

}  // namespace rothlab
