#pragma once

#include <optional>

#include "idealspaces/named_spaces.hpp"

namespace idealspaces {

/// Everything derived from one ring: the lattice, its classification and
/// lazily built family spaces. Spaces are cached per family tag.
class RingAnalysis {
 public:
  explicit RingAnalysis(const RingSpec& spec, const Caps& caps = Caps{});

  const FiniteRing& ring() const { return lattice_->ring; }
  const IdealLattice& lattice() const { return *lattice_; }
  std::shared_ptr<const IdealLattice> lattice_ptr() const { return lattice_; }
  const IdealClassification& classification() const { return cls_; }
  int dimension() const { return dim_; }

  const IdealSpace& space(Family f);

  /// Maximal ideals as lattice ids.
  BitSet maximal_ideals() const;
  /// True when the ring has exactly one maximal ideal.
  bool is_local() const;

 private:
  std::shared_ptr<const IdealLattice> lattice_;
  IdealClassification cls_;
  int dim_ = 0;
  std::array<std::optional<IdealSpace>, kAllFamilies.size()> spaces_;
};

/// Per-family verdict block of an analysis report.
struct FamilyReport {
  Family family;
  std::vector<IdealId> members;
  bool irreducible = false;  // of the whole family, when nonempty
  std::optional<std::pair<IdealId, IdealId>> irreducibility_witness;
  SobernessVerdict sober_direct;
  SobernessVerdict sober_criterion;
  SpectralityCertificate spectrality;
  QuasiCompactnessReport quasi_compactness;
};

struct AnalysisReport {
  std::string spec_text;
  nlohmann::json spec_json;
  std::size_t ring_size = 0;
  std::size_t ideal_count = 0;
  int dimension = 0;
  FamilyInclusionsReport inclusions;
  std::vector<FamilyReport> families;
  nlohmann::json lattice_json;
};

/// Runs the full pipeline for one ring; with `only` set, restricts the
/// per-family blocks to that family.
AnalysisReport analyze(const RingSpec& spec, std::optional<Family> only = std::nullopt,
                       const Caps& caps = Caps{});

nlohmann::json analysis_to_json(const AnalysisReport& rep);
std::string analysis_to_text(const AnalysisReport& rep);

nlohmann::json soberness_to_json(const SobernessVerdict& v, const IdealLattice& lat);
nlohmann::json quasi_compactness_to_json(const QuasiCompactnessReport& rep);
nlohmann::json spectrality_to_json(const SpectralityCertificate& cert, const IdealLattice& lat);

}  // namespace idealspaces
