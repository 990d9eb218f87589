#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rothlab/composite.hpp"
#include "rothlab/enumerate.hpp"
#include "rothlab/roth.hpp"

namespace rothlab {

class CensusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flags of one composite instance H = B + G.
struct ClassificationRecord {
  std::string scaffold_g6;  ///< graph6 of B, T-first
  std::size_t s = 0;
  std::size_t t = 0;
  double mu = 0.0;
  bool mu_exact = false;
  std::size_t multiplicity = 1;
  bool s_roth = false;
  RothReason reason = RothReason::MixedSigns;
  bool harmcond = false;
  bool gc = false;
  bool bdeg = false;
  bool st = false;
  bool z_matrix = false;
  /// Irreducible symmetric M-matrix (Z-pattern, positive definite, connected pattern).
  bool m_matrix = false;
  /// Z-pattern and positive definite but reducible; not counted as m_matrix.
  bool reducible_m_matrix = false;
  bool inverse_positive = false;
  bool minpositive = false;
  std::size_t near_zero_inverse_entries = 0;
  bool s_maximal = true;
  /// Row-sum criterion on R_mu, for complete scaffolds with R_mu positive definite.
  std::optional<bool> rmu_rowsums;
};

/// Throws CensusError if H is bipartite (mu = 0) or otherwise unclassifiable.
ClassificationRecord classify_instance(const Biadjacency& k, const Graph& g);

struct CensusRow {
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t total = 0;
  std::size_t n_s_roth = 0;
  std::size_t n_harmcond = 0;
  std::size_t n_m_matrix = 0;
  std::size_t n_inv_positive = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusOptions {
  bool allow_long = false;
  /// Leave out scaffolds where S is not a maximal independent set of H.
  bool require_maximal = false;
  /// 0 means the OpenMP default.
  int jobs = 0;
  /// Directory for the bipartite_t{t}_s{s}.g6 scaffold cache; empty disables it.
  std::filesystem::path cache_dir;
  /// Read the cache when present instead of enumerating.
  bool resume = false;
};

struct CensusResult {
  CensusRow row;
  std::vector<ClassificationRecord> records;  ///< enumeration order
  std::size_t excluded_non_maximal = 0;
};

std::filesystem::path scaffold_cache_path(const std::filesystem::path& dir, std::size_t t, std::size_t s);

/// Scaffolds in enumeration order, through the cache when configured.
std::vector<Biadjacency> load_scaffolds(std::size_t t, std::size_t s, const CensusOptions& opts);

/// Reference implementation: one thread, same output as run_census.
CensusResult run_census_serial(std::size_t t, std::size_t s, const Graph& g, const CensusOptions& opts = {});
CensusResult run_census(std::size_t t, std::size_t s, const Graph& g, const CensusOptions& opts = {});

CensusRow aggregate(std::size_t t, std::size_t s, const std::vector<ClassificationRecord>& records);

/// Header: s,total,s_roth,harmcond,m_matrix,inv_positive
void write_census_csv(std::ostream& os, const std::vector<CensusRow>& rows, bool header = true);

enum class ConjectureKind { Tree, MaxDeg };
std::string_view to_string(ConjectureKind k);
/// Throws CensusError on an unknown name.
ConjectureKind parse_conjecture_kind(std::string_view name);

struct Counterexample {
  ConjectureKind kind = ConjectureKind::Tree;
  std::size_t s = 0;
  std::size_t t = 0;
  std::string g6;  ///< the intra graph G
  double mu = 0.0;
  RothReason reason = RothReason::MixedSigns;
};

struct ConjectureOptions {
  ConjectureKind kind = ConjectureKind::MaxDeg;
  std::size_t s_min = 6;
  std::size_t s_max = 7;
  std::size_t t_min = 7;
  std::size_t t_max = 8;
  /// Drop the t > s >= 6 hypothesis.
  bool relaxed = false;
  /// Largest t enumerated exhaustively; larger t are sampled.
  std::size_t exhaustive_t = 8;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  int jobs = 0;
};

/// Whether G belongs to the family of the given conjecture for this s.
bool in_conjecture_family(ConjectureKind kind, std::size_t s, const Graph& g);

/// Oracle on K_s-bar join G; a counterexample iff G is in the family and H is not S-Roth.
std::optional<Counterexample> check_conjecture_instance(ConjectureKind kind, std::size_t s, const Graph& g);

struct ConjectureReport {
  std::size_t instances = 0;
  std::vector<Counterexample> counterexamples;
};

/// Sweeps every (s, t) in range (t > s >= 6 unless relaxed).
ConjectureReport conjecture_sweep(const ConjectureOptions& opts);

/// Header: kind,s,t,g6,mu,reason
void write_counterexamples_csv(std::ostream& os, const std::vector<Counterexample>& rows);

struct UltraRothFailure {
  std::size_t index = 0;  ///< position in the family
  std::string g6;
  RothReason reason = RothReason::MixedSigns;
};
struct UltraRothReport {
  bool all_s_roth = true;
  std::vector<UltraRothFailure> failures;
};

UltraRothReport ultra_roth_probe(const Biadjacency& k, const std::vector<Graph>& family);

/// K_{s,t} minus the edge between T-vertex 0 and S-column 0.
Biadjacency complete_minus_edge(std::size_t t, std::size_t s);

}  // namespace rothlab
