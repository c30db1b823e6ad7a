#include "idealspaces/named_spaces.hpp"

namespace idealspaces {

const char* family_tag(Family f) {
  switch (f) {
    case Family::spec: return "spec";
    case Family::max: return "max";
    case Family::prp: return "prp";
    case Family::rad: return "rad";
    case Family::min: return "min";
    case Family::spn: return "spn";
    case Family::prm: return "prm";
    case Family::nil: return "nil";
    case Family::nip: return "nip";
    case Family::irr: return "irr";
    case Family::irc: return "irc";
    case Family::prn: return "prn";
    case Family::reg: return "reg";
    case Family::fgn: return "fgn";
    case Family::irs: return "irs";
    case Family::idl: return "idl";
  }
  return "?";
}

Family family_from_tag(const std::string& tag) {
  for (Family f : kAllFamilies)
    if (tag == family_tag(f)) return f;
  throw PreconditionError("unknown family tag: " + tag +
                          " (expected one of spec,max,prp,rad,min,spn,prm,nil,nip,irr,irc,prn,"
                          "reg,fgn,irs,idl)");
}

BitSet family_members(const IdealLattice& lat, const IdealClassification& cls, Family f) {
  std::size_t m = lat.count();
  BitSet out(m);
  for (IdealId i = 0; i < m; ++i) {
    bool in = false;
    switch (f) {
      case Family::spec: in = cls.prime[i]; break;
      case Family::max: in = cls.maximal[i]; break;
      case Family::prp: in = cls.proper[i]; break;
      case Family::rad: in = cls.radical[i]; break;
      case Family::min: in = cls.minimal[i]; break;
      case Family::spn: in = cls.minimal_prime[i]; break;
      case Family::prm: in = cls.primary[i]; break;
      case Family::nil: in = cls.nil[i]; break;
      case Family::nip: in = cls.nilpotent[i]; break;
      case Family::irr: in = cls.irreducible[i]; break;
      case Family::irc: in = cls.completely_irreducible[i]; break;
      case Family::prn: in = cls.principal[i]; break;
      case Family::reg: in = cls.regular[i] && cls.proper[i]; break;
      case Family::fgn: in = cls.finitely_generated[i] && cls.proper[i]; break;
      case Family::irs: in = cls.strongly_irreducible[i]; break;
      case Family::idl: in = true; break;
    }
    if (in) out.set(i);
  }
  return out;
}

IdealSpace build_space(std::shared_ptr<const IdealLattice> lat, const IdealClassification& cls,
                       Family f) {
  BitSet members = family_members(*lat, cls, f);
  std::string label = std::string(family_tag(f)) + "(" + lat->ring.spec_text() + ")";
  return make_ideal_space(std::move(lat), members, std::move(label));
}

FamilyInclusionsReport family_inclusions_report(const IdealLattice& lat,
                                                const IdealClassification& cls) {
  FamilyInclusionsReport rep;
  auto members = [&](Family f) { return family_members(lat, cls, f); };
  BitSet max = members(Family::max);
  BitSet spec = members(Family::spec);
  BitSet irs = members(Family::irs);
  BitSet prm = members(Family::prm);
  BitSet irr = members(Family::irr);
  BitSet irc = members(Family::irc);
  BitSet rad = members(Family::rad);
  BitSet prp = members(Family::prp);

  rep.max_in_irs = max.subset_of(irs);
  rep.max_in_spec = max.subset_of(spec);
  rep.spec_in_prm = spec.subset_of(prm);
  rep.prm_in_irr = prm.subset_of(irr);
  rep.irc_in_irr = irc.subset_of(irr);
  const BitSet* qc_families[8] = {&max, &spec, &irs, &prm, &irr, &irc, &rad, &prp};
  for (std::size_t k = 0; k < 8; ++k) rep.max_in_qc_families[k] = max.subset_of(*qc_families[k]);

  rep.fgn_equals_prp = members(Family::fgn) == prp;
  rep.reg_empty = members(Family::reg).empty();
  rep.nil_equals_nip = members(Family::nil) == members(Family::nip);
  rep.spec_equals_max = spec == max;
  rep.spec_equals_spn = spec == members(Family::spn);
  rep.dimension_zero = krull_dimension(lat, cls) == 0;

  rep.all_hold = rep.max_in_irs && rep.max_in_spec && rep.spec_in_prm && rep.prm_in_irr &&
                 rep.irc_in_irr && rep.fgn_equals_prp && rep.reg_empty && rep.nil_equals_nip &&
                 rep.spec_equals_max && rep.spec_equals_spn && rep.dimension_zero;
  for (bool b : rep.max_in_qc_families) rep.all_hold = rep.all_hold && b;
  return rep;
}

nlohmann::json inclusions_to_json(const FamilyInclusionsReport& rep) {
  return {{"max_in_irs", rep.max_in_irs},
          {"max_in_spec", rep.max_in_spec},
          {"spec_in_prm", rep.spec_in_prm},
          {"prm_in_irr", rep.prm_in_irr},
          {"irc_in_irr", rep.irc_in_irr},
          {"max_in_qc_families", rep.max_in_qc_families},
          {"fgn_equals_prp", rep.fgn_equals_prp},
          {"reg_empty", rep.reg_empty},
          {"nil_equals_nip", rep.nil_equals_nip},
          {"spec_equals_max", rep.spec_equals_max},
          {"spec_equals_spn", rep.spec_equals_spn},
          {"dimension_zero", rep.dimension_zero},
          {"all_hold", rep.all_hold}};
}

}  // namespace idealspaces
