#include "idealspaces/report.hpp"

#include <sstream>

namespace idealspaces {

RingAnalysis::RingAnalysis(const RingSpec& spec, const Caps& caps) {
  FiniteRing r = build_ring(spec, caps);
  lattice_ = std::make_shared<IdealLattice>(enumerate_ideals(r, caps));
  cls_ = classify(*lattice_);
  dim_ = krull_dimension(*lattice_, cls_);
}

const IdealSpace& RingAnalysis::space(Family f) {
  auto& slot = spaces_[static_cast<std::size_t>(f)];
  if (!slot) slot = build_space(lattice_, cls_, f);
  return *slot;
}

BitSet RingAnalysis::maximal_ideals() const {
  BitSet out(lattice_->count());
  for (IdealId i = 0; i < lattice_->count(); ++i)
    if (cls_.maximal[i]) out.set(i);
  return out;
}

bool RingAnalysis::is_local() const { return maximal_ideals().count() == 1; }

nlohmann::json soberness_to_json(const SobernessVerdict& v, const IdealLattice& lat) {
  nlohmann::json j{{"sober", v.sober}, {"method", v.method}};
  if (v.witness_closed_set) {
    nlohmann::json names = nlohmann::json::array();
    for (IdealId id : *v.witness_closed_set) names.push_back(lat.ideal_name(id));
    j["witness_closed_set"] = *v.witness_closed_set;
    j["witness_closed_set_names"] = names;
  }
  if (v.witness_ideal) {
    j["witness_ideal"] = *v.witness_ideal;
    j["witness_ideal_name"] = lat.ideal_name(*v.witness_ideal);
  }
  if (v.witness_x_radical) j["witness_x_radical"] = *v.witness_x_radical;
  return j;
}

nlohmann::json quasi_compactness_to_json(const QuasiCompactnessReport& rep) {
  nlohmann::json j{{"qc", rep.qc},
                   {"everyone_below_max", rep.everyone_below_max},
                   {"max_qc", rep.max_qc},
                   {"chain_bounds_ok", rep.chain_bounds_ok},
                   {"chains_checked", rep.chains_checked},
                   {"chains_exhaustive", rep.chains_exhaustive},
                   {"equivalence_holds", rep.equivalence_holds}};
  if (rep.witness_unbounded_point) j["witness_unbounded_point"] = *rep.witness_unbounded_point;
  if (rep.witness_chain) j["witness_chain"] = *rep.witness_chain;
  return j;
}

nlohmann::json spectrality_to_json(const SpectralityCertificate& cert, const IdealLattice& lat) {
  return {{"t0", cert.t0},
          {"quasi_compact", cert.quasi_compact},
          {"qc_open_basis", cert.qc_open_basis},
          {"soberness", soberness_to_json(cert.soberness, lat)},
          {"spectral", cert.spectral}};
}

AnalysisReport analyze(const RingSpec& spec, std::optional<Family> only, const Caps& caps) {
  RingAnalysis an(spec, caps);
  AnalysisReport rep;
  rep.spec_text = an.ring().spec_text();
  rep.spec_json = ring_spec_to_json(spec);
  rep.ring_size = an.ring().size();
  rep.ideal_count = an.lattice().count();
  rep.dimension = an.dimension();
  rep.inclusions = family_inclusions_report(an.lattice(), an.classification());
  rep.lattice_json = lattice_to_json(an.lattice(), an.classification());

  for (Family f : kAllFamilies) {
    if (only && *only != f) continue;
    const IdealSpace& sp = an.space(f);
    FamilyReport fr;
    fr.family = f;
    fr.members = sp.points;
    if (sp.size() > 0) {
      BitSet everything = BitSet::full(sp.size());
      IrreducibilityResult ir = is_irreducible(sp, everything, sp.size() <= 10);
      fr.irreducible = ir.irreducible;
      if (ir.witness_pair)
        fr.irreducibility_witness = {sp.points[ir.witness_pair->first],
                                     sp.points[ir.witness_pair->second]};
    }
    fr.sober_direct = is_sober_direct(sp, caps);
    fr.sober_criterion = is_sober_criterion(sp);
    fr.spectrality = is_spectral_finite(sp, caps);
    fr.quasi_compactness = quasi_compactness_report(sp, caps);
    rep.families.push_back(std::move(fr));
  }
  return rep;
}

nlohmann::json analysis_to_json(const AnalysisReport& rep) {
  nlohmann::json families = nlohmann::json::object();
  for (const FamilyReport& fr : rep.families) {
    nlohmann::json jf{{"members", fr.members},
                      {"member_count", fr.members.size()},
                      {"irreducible", fr.irreducible},
                      {"sober_direct", {{"sober", fr.sober_direct.sober},
                                        {"method", fr.sober_direct.method}}},
                      {"sober_criterion", {{"sober", fr.sober_criterion.sober},
                                           {"method", fr.sober_criterion.method}}},
                      {"spectral", fr.spectrality.spectral},
                      {"quasi_compactness", quasi_compactness_to_json(fr.quasi_compactness)}};
    if (fr.irreducibility_witness)
      jf["irreducibility_witness"] =
          nlohmann::json::array({fr.irreducibility_witness->first,
                                 fr.irreducibility_witness->second});
    if (fr.sober_direct.witness_closed_set)
      jf["sober_direct"]["witness_closed_set"] = *fr.sober_direct.witness_closed_set;
    if (fr.sober_criterion.witness_ideal)
      jf["sober_criterion"]["witness_ideal"] = *fr.sober_criterion.witness_ideal;
    families[family_tag(fr.family)] = jf;
  }
  return {{"schema_version", 1},
          {"ring", {{"spec_text", rep.spec_text},
                    {"spec", rep.spec_json},
                    {"size", rep.ring_size}}},
          {"lattice", {{"ideal_count", rep.ideal_count},
                       {"krull_dimension", rep.dimension},
                       {"detail", rep.lattice_json}}},
          {"inclusions", inclusions_to_json(rep.inclusions)},
          {"families", families},
          {"conventions",
           {{"prp", "proper ideals"},
            {"rad", "ideals equal to their radical, including R"},
            {"fgn", "proper finitely generated ideals (= prp for finite rings)"},
            {"prn", "principal ideals, including (0) and R"},
            {"reg", "proper ideals containing a regular element (empty for finite rings)"},
            {"min", "minimal nonzero ideals"},
            {"irr_irc_irs", "restricted to proper ideals"}}}};
}

std::string analysis_to_text(const AnalysisReport& rep) {
  std::ostringstream out;
  out << "ring " << rep.spec_text << "  (size " << rep.ring_size << ")\n";
  out << "ideals: " << rep.ideal_count << "  krull dimension: " << rep.dimension << "\n";
  out << "inclusions hold: " << (rep.inclusions.all_hold ? "yes" : "NO") << "\n";
  // resolve ideal names from the lattice detail block
  std::vector<std::string> names(rep.ideal_count);
  for (const auto& ideal : rep.lattice_json.at("ideals"))
    names[ideal.at("index").get<std::size_t>()] = ideal.at("name").get<std::string>();
  for (const FamilyReport& fr : rep.families) {
    out << "\n[" << family_tag(fr.family) << "] " << fr.members.size() << " member(s): ";
    for (std::size_t i = 0; i < fr.members.size(); ++i) {
      if (i) out << ", ";
      if (i == 12 && fr.members.size() > 14) {
        out << "... (" << fr.members.size() - i << " more)";
        break;
      }
      out << names[fr.members[i]];
    }
    out << "\n";
    if (fr.members.empty()) {
      out << "  empty space: quasi-compact, sober, spectral by convention of the empty cover\n";
      continue;
    }
    out << "  irreducible: " << (fr.irreducible ? "yes" : "no");
    if (fr.irreducibility_witness)
      out << "  (separating pair " << names[fr.irreducibility_witness->first] << ", "
          << names[fr.irreducibility_witness->second] << ")";
    out << "\n  sober: direct=" << (fr.sober_direct.sober ? "yes" : "no") << " ["
        << fr.sober_direct.method << "], criterion=" << (fr.sober_criterion.sober ? "yes" : "no")
        << "\n  spectral: " << (fr.spectrality.spectral ? "yes" : "no")
        << "\n  quasi-compact: " << (fr.quasi_compactness.qc ? "yes" : "no")
        << " (everyone_below_max=" << (fr.quasi_compactness.everyone_below_max ? "yes" : "no")
        << ", chains ok=" << (fr.quasi_compactness.chain_bounds_ok ? "yes" : "no") << ")\n";
  }
  return out.str();
}

}  // namespace idealspaces
