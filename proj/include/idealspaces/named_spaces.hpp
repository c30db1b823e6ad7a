#pragma once

#include <array>

#include "idealspaces/topology.hpp"

namespace idealspaces {

/// The named ideal families. Conventions: prp is the proper ideals; fgn is
/// the proper finitely generated ideals (= prp in a finite ring); prn keeps
/// (0) and R whenever principal (R always is); reg is the proper regular
/// ideals (empty in a finite ring); min is the minimal nonzero ideals; rad
/// keeps R (R equals its own radical); irr/irc/irs are restricted to proper
/// ideals by definition; idl is the whole lattice.
enum class Family : std::uint8_t {
  spec,
  max,
  prp,
  rad,
  min,
  spn,
  prm,
  nil,
  nip,
  irr,
  irc,
  prn,
  reg,
  fgn,
  irs,
  idl,
};

inline constexpr std::array<Family, 16> kAllFamilies = {
    Family::spec, Family::max, Family::prp, Family::rad, Family::min, Family::spn,
    Family::prm,  Family::nil, Family::nip, Family::irr, Family::irc, Family::prn,
    Family::reg,  Family::fgn, Family::irs, Family::idl,
};

const char* family_tag(Family f);
Family family_from_tag(const std::string& tag);

/// Membership of a family as a set of lattice ideal ids, reproducible from
/// the classification alone.
BitSet family_members(const IdealLattice& lat, const IdealClassification& cls, Family f);

/// The family as an ideal space with the subspace topology.
IdealSpace build_space(std::shared_ptr<const IdealLattice> lat, const IdealClassification& cls,
                       Family f);

/// Family inclusion facts. Each field is computed by comparing membership
/// sets; `all_hold` is their conjunction.
struct FamilyInclusionsReport {
  bool max_in_irs = false;
  bool max_in_spec = false;
  bool spec_in_prm = false;
  bool prm_in_irr = false;
  bool irc_in_irr = false;
  /// Max(R) contained in each of max, spec, irs, prm, irr, irc, rad, prp.
  std::array<bool, 8> max_in_qc_families{};
  bool fgn_equals_prp = false;
  bool reg_empty = false;
  bool nil_equals_nip = false;
  bool spec_equals_max = false;
  bool spec_equals_spn = false;
  bool dimension_zero = false;
  bool all_hold = false;
};

FamilyInclusionsReport family_inclusions_report(const IdealLattice& lat,
                                                const IdealClassification& cls);

nlohmann::json inclusions_to_json(const FamilyInclusionsReport& rep);

}  // namespace idealspaces
