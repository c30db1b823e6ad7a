#pragma once

#include <span>

#include "idealspaces/report.hpp"
#include "idealspaces/z_ideals.hpp"

namespace idealspaces {

/// Ring families and bounds for the verification corpus. The defaults
/// produce >= 150 rings, each with a modest ideal lattice.
struct CorpusSpec {
  std::uint64_t zmod_max = 64;
  std::uint64_t poly_p_max = 5;
  std::uint32_t poly_deg_max = 3;
  std::uint32_t product_max_factors = 3;
  std::size_t max_ring_size = 1024;
  std::size_t max_ideals = 4096;
  std::uint64_t seed = 7;
  std::vector<std::string> extra_specs;

  nlohmann::json to_json() const;
  static CorpusSpec from_json(const nlohmann::json& j);
};

/// Deterministic corpus: Z/n, univariate quotients over small prime fields,
/// products of small factors and a batch of ring quotients.
std::vector<RingSpec> generate_corpus(const CorpusSpec& spec);

enum class CheckId : std::uint8_t {
  sober_eq,
  qc_eq,
  qc_cor,
  chain,
  noeth,
  spectral_sober,
  inf,
  prm_irrid,
  prm_sober,
  prm_loc,
  quot_homeo,
  z_example,
  adversarial,
};

inline constexpr std::array<CheckId, 13> kAllChecks = {
    CheckId::sober_eq, CheckId::qc_eq,      CheckId::qc_cor,     CheckId::chain,
    CheckId::noeth,    CheckId::spectral_sober, CheckId::inf,    CheckId::prm_irrid,
    CheckId::prm_sober, CheckId::prm_loc,   CheckId::quot_homeo, CheckId::z_example,
    CheckId::adversarial,
};

const char* check_tag(CheckId id);    // "chk-sober-eq", ...
const char* check_claim(CheckId id);  // one-line description of what is verified
CheckId check_from_tag(const std::string& tag);

struct RingVerdict {
  std::string ring;
  std::string status;  // "pass" | "fail" | "skip"
  nlohmann::json details;
};

struct TheoremReport {
  std::string check;
  std::string claim;
  std::vector<RingVerdict> rings;
  std::uint64_t pass = 0, fail = 0, skip = 0;
  double seconds = 0;  // console summary only; excluded from serialized reports

  bool ok() const { return fail == 0; }
  nlohmann::json to_json() const;
};

struct HarnessOptions {
  Caps caps;
  std::uint64_t seed = 1;
  std::uint64_t z_bound = 10000;
  std::uint64_t noeth_subset_samples = 1000;
  std::uint64_t directed_subset_budget = 5000000;
};

/// The non-sober fixtures: explicit closed-set systems sampling the
/// subbasic traces of infinite irreducible spaces on finitely many points.
std::vector<ClosedSystem> adversarial_fixtures();
/// Genuine finite topologies fed through the same machinery; these must come
/// out sober.
std::vector<ClosedSystem> control_fixtures();

/// One ring pipeline per corpus entry; construction failures (resource caps)
/// are returned as skip records applied to every check.
struct CorpusPipelines {
  std::vector<std::unique_ptr<RingAnalysis>> rings;
  std::vector<RingVerdict> skipped;
};

CorpusPipelines build_pipelines(const std::vector<RingSpec>& corpus, const HarnessOptions& opt);

TheoremReport run_check(CheckId id, CorpusPipelines& pipelines, const HarnessOptions& opt);

std::vector<TheoremReport> run_checks(std::span<const CheckId> checks, const CorpusSpec& corpus,
                                      const HarnessOptions& opt);

std::string summary_table(const std::vector<TheoremReport>& reports, bool with_timing);

}  // namespace idealspaces
