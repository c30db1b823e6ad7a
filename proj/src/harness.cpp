#include "idealspaces/harness.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace idealspaces {

namespace {

std::uint64_t fnv64(const std::string& s, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

nlohmann::json CorpusSpec::to_json() const {
  return {{"zmod_max", zmod_max},
          {"poly_p_max", poly_p_max},
          {"poly_deg_max", poly_deg_max},
          {"product_max_factors", product_max_factors},
          {"max_ring_size", max_ring_size},
          {"max_ideals", max_ideals},
          {"seed", seed},
          {"extra_specs", extra_specs}};
}

CorpusSpec CorpusSpec::from_json(const nlohmann::json& j) {
  CorpusSpec s;
  if (j.contains("zmod_max")) s.zmod_max = j.at("zmod_max").get<std::uint64_t>();
  if (j.contains("poly_p_max")) s.poly_p_max = j.at("poly_p_max").get<std::uint64_t>();
  if (j.contains("poly_deg_max")) s.poly_deg_max = j.at("poly_deg_max").get<std::uint32_t>();
  if (j.contains("product_max_factors"))
    s.product_max_factors = j.at("product_max_factors").get<std::uint32_t>();
  if (j.contains("max_ring_size")) s.max_ring_size = j.at("max_ring_size").get<std::size_t>();
  if (j.contains("max_ideals")) s.max_ideals = j.at("max_ideals").get<std::size_t>();
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("extra_specs"))
    s.extra_specs = j.at("extra_specs").get<std::vector<std::string>>();
  return s;
}

std::vector<RingSpec> generate_corpus(const CorpusSpec& spec) {
  std::vector<RingSpec> out;
  std::set<std::string> seen;
  auto push = [&](RingSpec rs) {
    std::string text = ring_spec_to_text(rs);
    if (seen.insert(text).second) out.push_back(std::move(rs));
  };

  for (std::uint64_t n = 2; n <= spec.zmod_max; ++n) push(RingSpec::zmod(n));

  // monic moduli with coefficients in {0,1}: all of them for p = 2, a
  // canonical slice for larger p
  for (std::uint64_t p : primes_up_to(spec.poly_p_max)) {
    for (std::uint32_t d = 1; d <= spec.poly_deg_max; ++d) {
      for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        std::vector<std::uint32_t> coeffs(d + 1, 0);
        coeffs[d] = 1;
        for (std::uint32_t i = 0; i < d; ++i) coeffs[i] = (mask >> i) & 1;
        push(RingSpec::poly_quot(p, coeffs));
      }
    }
  }

  if (spec.product_max_factors >= 2) {
    std::vector<RingSpec> pool;
    for (const char* t : {"Z/2", "Z/3", "Z/4", "Z/5", "Z/8", "Z/9", "GF(2)[x]/(x^2)",
                          "GF(2)[x]/(x^2+x+1)", "GF(3)[x]/(x^2)", "Z/6", "Z/12"})
      pool.push_back(parse_ring_spec(t));
    auto size_of = [](const RingSpec& rs) {
      Caps c;
      return build_ring(rs, c).size();
    };
    std::vector<std::size_t> sizes;
    for (const auto& f : pool) sizes.push_back(size_of(f));
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i; j < pool.size(); ++j) {
        if (sizes[i] * sizes[j] > spec.max_ring_size) continue;
        push(RingSpec::product({pool[i], pool[j]}));
      }
    if (spec.product_max_factors >= 3) {
      std::vector<std::size_t> small;  // triple factors stay tiny
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (sizes[i] <= 9) small.push_back(i);
      for (std::size_t a = 0; a < small.size(); ++a)
        for (std::size_t b = a; b < small.size(); ++b)
          for (std::size_t c = b; c < small.size(); ++c) {
            std::size_t total = sizes[small[a]] * sizes[small[b]] * sizes[small[c]];
            if (total > spec.max_ring_size) continue;
            // fully distinct triples are kept sparse: only those starting
            // at the first pool entry, to bound the corpus
            if (a != b && b != c && small[a] != 0) continue;
            push(RingSpec::product({pool[small[a]], pool[small[b]], pool[small[c]]}));
          }
    }
  }

  // quotients: texture for the Quotient spec path
  for (const char* t : {"Z/8 / (4)", "Z/12 / (6)", "Z/16 / (8)", "Z/24 / (12)", "Z/36 / (6)",
                        "Z/48 / (8)", "Z/60 / (30)", "Z/64 / (16)", "GF(2)[x]/(x^3) / (4)",
                        "GF(3)[x]/(x^3) / (9)", "(Z/4 x Z/4) / ((2,0))", "(Z/2 x Z/8) / ((0,4))",
                        "(Z/6 x Z/6) / ((2,3))", "(Z/4 x Z/9) / ((2,3))",
                        "(Z/8 x Z/8) / ((4,4))"})
    push(parse_ring_spec(t));

  for (const std::string& t : spec.extra_specs) push(parse_ring_spec(t));
  return out;
}

// ---------------------------------------------------------------------------
// Checks: identifiers
// ---------------------------------------------------------------------------

const char* check_tag(CheckId id) {
  switch (id) {
    case CheckId::sober_eq: return "chk-sober-eq";
    case CheckId::qc_eq: return "chk-qc-eq";
    case CheckId::qc_cor: return "chk-qc-cor";
    case CheckId::chain: return "chk-chain";
    case CheckId::noeth: return "chk-noeth";
    case CheckId::spectral_sober: return "chk-spectral-sober";
    case CheckId::inf: return "chk-inf";
    case CheckId::prm_irrid: return "chk-prm-irrid";
    case CheckId::prm_sober: return "chk-prm-sober";
    case CheckId::prm_loc: return "chk-prm-loc";
    case CheckId::quot_homeo: return "chk-quot-homeo";
    case CheckId::z_example: return "chk-z";
    case CheckId::adversarial: return "chk-adversarial";
  }
  return "?";
}

const char* check_claim(CheckId id) {
  switch (id) {
    case CheckId::sober_eq:
      return "direct soberness agrees with the radical-trace criterion on every family";
    case CheckId::qc_eq:
      return "quasi-compactness equals everyone-below-max plus quasi-compact maxima";
    case CheckId::qc_cor:
      return "families containing every maximal ideal are quasi-compact";
    case CheckId::chain: return "every maximal chain in every family has an upper bound";
    case CheckId::noeth:
      return "the full ideal lattice is sober with generic point the member intersection, "
             "and subsets are quasi-compact via the finite sum identity";
    case CheckId::spectral_sober: return "spectral equals sober for finite ideal spaces";
    case CheckId::inf:
      return "in sober families, lower-directed subsets keep their infimum in the family";
    case CheckId::prm_irrid:
      return "primary ideals of a non-local finite ring form a reducible space";
    case CheckId::prm_sober: return "primary ideals of a finite ring form a sober spectral space";
    case CheckId::prm_loc:
      return "localization at a maximal ideal restricts the primary space homeomorphically";
    case CheckId::quot_homeo:
      return "quotient maps identify primary ideals above the kernel with the quotient's "
             "primary space";
    case CheckId::z_example:
      return "reg(Z) is irreducible yet not sober; prm(Z) is sober at bounded scale";
    case CheckId::adversarial:
      return "explicit closed-set systems sampling infinite traces are detected as non-sober";
  }
  return "?";
}

CheckId check_from_tag(const std::string& tag) {
  for (CheckId id : kAllChecks)
    if (tag == check_tag(id)) return id;
  throw PreconditionError("unknown check tag: " + tag);
}

nlohmann::json TheoremReport::to_json() const {
  nlohmann::json jr = nlohmann::json::array();
  for (const RingVerdict& v : rings)
    jr.push_back({{"ring", v.ring}, {"status", v.status}, {"details", v.details}});
  return {{"schema_version", 1},
          {"check", check},
          {"claim", claim},
          {"rings", jr},
          {"summary", {{"pass", pass}, {"fail", fail}, {"skip", skip}}}};
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

namespace {

ClosedSystem make_system(std::string label, std::vector<std::string> names,
                         std::vector<std::vector<std::uint32_t>> closed) {
  ClosedSystem sys;
  sys.label = std::move(label);
  sys.point_names = std::move(names);
  for (const auto& members : closed) {
    BitSet c(sys.point_names.size());
    for (auto m : members) c.set(m);
    sys.closed.push_back(c);
  }
  return sys;
}

}  // namespace

std::vector<ClosedSystem> adversarial_fixtures() {
  std::vector<ClosedSystem> out;
  // three maximal members of an irreducible infinite space, plus the trace
  // of a deep subbasic closed set; the unions witnessing reducibility live
  // off-sample, so the whole set is irreducible without a generic point
  out.push_back(make_system("tripod-trace", {"a", "b", "c"},
                            {{}, {0}, {1}, {2}, {0, 1, 2}}));
  // a two-point trace arm plus two isolated sample points
  out.push_back(make_system("two-arm-trace", {"a", "b", "c", "d"},
                            {{}, {0, 1}, {2}, {3}, {0, 1, 2, 3}}));
  // overlapping arms: closures of the shared point shrink to a singleton
  out.push_back(make_system("fan-trace", {"a", "b", "c", "d", "e"},
                            {{}, {0, 1}, {1, 2}, {3}, {4}, {0, 1, 2, 3, 4}}));
  return out;
}

std::vector<ClosedSystem> control_fixtures() {
  std::vector<ClosedSystem> out;
  // the two maximal points of the 3-point "V" poset with their genuine
  // subspace topology (bottom point removed): a finite topology, hence sober
  out.push_back(make_system("v-subspace", {"a", "b"}, {{}, {0}, {1}, {0, 1}}));
  // the full up-set family of the diamond poset 0 < a,b < 1
  out.push_back(make_system("diamond-upsets", {"bot", "a", "b", "top"},
                            {{},
                             {3},
                             {1, 3},
                             {2, 3},
                             {1, 2, 3},
                             {0, 1, 2, 3}}));
  return out;
}

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------

CorpusPipelines build_pipelines(const std::vector<RingSpec>& corpus, const HarnessOptions& opt) {
  CorpusPipelines p;
  for (const RingSpec& spec : corpus) {
    std::string text = ring_spec_to_text(spec);
    try {
      p.rings.push_back(std::make_unique<RingAnalysis>(spec, opt.caps));
    } catch (const ResourceError& e) {
      p.skipped.push_back({text, "skip", {{"reason", e.what()}}});
    }
  }
  return p;
}

namespace {

struct CheckRun {
  TheoremReport report;

  explicit CheckRun(CheckId id) {
    report.check = check_tag(id);
    report.claim = check_claim(id);
  }
  void add(const std::string& ring, bool ok, nlohmann::json details) {
    report.rings.push_back({ring, ok ? "pass" : "fail", std::move(details)});
    (ok ? report.pass : report.fail)++;
  }
  void skip(const RingVerdict& v) {
    report.rings.push_back(v);
    report.skip++;
  }
};

// -- chk-sober-eq ------------------------------------------------------------

void run_sober_eq(CheckRun& run, CorpusPipelines& pipes, const HarnessOptions& opt) {
  for (auto& an : pipes.rings) {
    bool ok = true;
    nlohmann::json fams = nlohmann::json::object();
    for (Family f : kAllFamilies) {
      const IdealSpace& sp = an->space(f);
      SobernessVerdict d = is_sober_direct(sp, opt.caps);
      SobernessVerdict c = is_sober_criterion(sp);
      bool agree = d.sober == c.sober;
      ok = ok && agree;
      nlohmann::json entry{{"direct", d.sober},
                           {"criterion", c.sober},
                           {"direct_method", d.method},
                           {"agree", agree}};
      if (!agree) {  // replayable witness for the disagreeing verdicts
        entry["direct_verdict"] = soberness_to_json(d, an->lattice());
        entry["criterion_verdict"] = soberness_to_json(c, an->lattice());
      }
      fams[family_tag(f)] = entry;
    }
    run.add(an->ring().spec_text(), ok, {{"families", fams}});
  }
}

// -- chk-qc-eq ---------------------------------------------------------------

void run_qc_eq(CheckRun& run, CorpusPipelines& pipes, const HarnessOptions& opt) {
  for (auto& an : pipes.rings) {
    bool ok = true;
    nlohmann::json fams = nlohmann::json::object();
    for (Family f : kAllFamilies) {
      const IdealSpace& sp = an->space(f);
      QuasiCompactnessReport rep =
          quasi_compactness_report(sp, opt.caps, fnv64(sp.label, opt.seed));
      bool good = rep.equivalence_holds && rep.qc && rep.everyone_below_max && rep.max_qc &&
                  rep.chain_bounds_ok;
      ok = ok && good;
      fams[family_tag(f)] = quasi_compactness_to_json(rep);
    }
    run.add(an->ring().spec_text(), ok, {{"families", fams}});
  }
}

// -- chk-qc-cor --------------------------------------------------------------

void run_qc_cor(CheckRun& run, CorpusPipelines& pipes, const HarnessOptions& opt) {
  constexpr Family qc_families[8] = {Family::max, Family::spec, Family::irs, Family::prm,
                                     Family::irr, Family::irc, Family::rad, Family::prp};
  for (auto& an : pipes.rings) {
    BitSet maxima = an->maximal_ideals();
    bool ok = true;
    nlohmann::json fams = nlohmann::json::object();
    for (Family f : qc_families) {
      const IdealSpace& sp = an->space(f);
      bool contains_max = maxima.subset_of(sp.member_ids);
      QuasiCompactnessReport rep =
          quasi_compactness_report(sp, opt.caps, fnv64(sp.label, opt.seed));
      bool good = contains_max && rep.qc && rep.equivalence_holds;
      ok = ok && good;
      fams[family_tag(f)] = {{"contains_all_maximal", contains_max}, {"qc", rep.qc}};
    }
    run.add(an->ring().spec_text(), ok, {{"families", fams}});
  }
}

// -- chk-chain ---------------------------------------------------------------

void run_chain(CheckRun& run, CorpusPipelines& pipes, const HarnessOptions& opt) {
  for (auto& an : pipes.rings) {
    bool ok = true;
    nlohmann::json fams = nlohmann::json::object();
    for (Family f : kAllFamilies) {
      const IdealSpace& sp = an->space(f);
      QuasiCompactnessReport rep =
          quasi_compactness_report(sp, opt.caps, fnv64(sp.label, opt.seed ^ 0xc8a1));
      ok = ok && rep.chain_bounds_ok;
      fams[family_tag(f)] = {{"chain_bounds_ok", rep.chain_bounds_ok},
                             {"chains_checked", rep.chains_checked},
                             {"exhaustive", rep.chains_exhaustive}};
    }
    run.add(an->ring().spec_text(), ok, {{"families", fams}});
  }
}

// -- chk-noeth ---------------------------------------------------------------

void run_noeth(CheckRun& run, CorpusPipelines& pipes, const HarnessOptions& opt) {
  for (auto& an : pipes.rings) {
    const IdealLattice& lat = an->lattice();
    const IdealSpace& idl = an->space(Family::idl);
    SobernessVerdict d = is_sober_direct(idl, opt.caps);
    bool ok = d.sober;

    // generic point of every irreducible closed set equals the member
    // intersection: irreducible closed sets of the full lattice are the
    // principal up-sets, whose intersection is the root ideal
    bool generic_is_intersection = true;
    for (IdealId i = 0; i < lat.count(); ++i) {
      BitSet inter = BitSet::full(lat.ring.size());
      lat.up[i].for_each([&](std::size_t j) { inter &= lat.ideals[j]; });
      if (!(inter == lat.ideals[i])) generic_is_intersection = false;
    }
    ok = ok && generic_is_intersection;

    // sampled subsets: quasi-compact via maximal elements, and the finite
    // sum identity behind the subbasic FIP argument; the derived seed makes
    // the sample list replayable
    std::uint64_t sample_seed = fnv64(lat.ring.spec_text(), opt.seed ^ 0x0e47);
    std::mt19937_64 rng(sample_seed);
    std::uint64_t subset_failures = 0, identity_failures = 0;
    std::size_t m = lat.count();
    for (std::uint64_t s = 0; s < opt.noeth_subset_samples; ++s) {
      BitSet y(m);
      for (std::size_t i = 0; i < m; ++i)
        if (rng() & 1) y.set(i);
      if (y.empty()) y.set(rng() % m);
      // everyone below a maximal member of y
      BitSet maxima(m);
      y.for_each([&](std::size_t i) {
        if ((lat.up[i] & y).count() == 1) maxima.set(i);
      });
      bool below = true;
      y.for_each([&](std::size_t i) {
        if (!(lat.up[i] & maxima).any()) below = false;
      });
      if (!below) ++subset_failures;
      // intersection of subbasic traces equals the trace of the sum
      IdealId a1 = static_cast<IdealId>(rng() % m);
      IdealId a2 = static_cast<IdealId>(rng() % m);
      IdealId a3 = static_cast<IdealId>(rng() % m);
      BitSet lhs = lat.up[a1] & lat.up[a2] & lat.up[a3] & y;
      IdealId total = lat.sum(lat.sum(a1, a2), a3);
      BitSet rhs = lat.up[total] & y;
      if (!(lhs == rhs)) ++identity_failures;
    }
    ok = ok && subset_failures == 0 && identity_failures == 0;
    run.add(lat.ring.spec_text(), ok,
            {{"sober", d.sober},
             {"generic_is_intersection", generic_is_intersection},
             {"subsets_sampled", opt.noeth_subset_samples},
             {"sample_seed", sample_seed},
             {"subset_failures", subset_failures},
             {"sum_identity_failures", identity_failures}});
  }
}

// -- chk-spectral-sober --------------------------------------------------------

void run_spectral_sober(CheckRun& run, CorpusPipelines& pipes, const HarnessOptions& opt) {
  for (auto& an : pipes.rings) {
    bool ok = true;
    nlohmann::json fams = nlohmann::json::object();
    for (Family f : kAllFamilies) {
      const IdealSpace& sp = an->space(f);
      SpectralityCertificate cert = is_spectral_finite(sp, opt.caps);
      SobernessVerdict d = is_sober_direct(sp, opt.caps);
      bool agree = cert.spectral == d.sober;
      ok = ok && agree;
      fams[family_tag(f)] = {{"spectral", cert.spectral}, {"sober", d.sober}, {"agree", agree}};
    }
    run.add(an->ring().spec_text(), ok, {{"families", fams}});
  }
}

// -- chk-inf -------------------------------------------------------------------

void run_inf(CheckRun& run, CorpusPipelines& pipes, const HarnessOptions& opt) {
  for (auto& an : pipes.rings) {
    bool ok = true;
    nlohmann::json fams = nlohmann::json::object();
    for (Family f : kAllFamilies) {
      const IdealSpace& sp = an->space(f);
      if (sp.size() == 0) {
        fams[family_tag(f)] = {{"subsets_checked", 0}, {"empty", true}};
        continue;
      }
      SobernessVerdict d = is_sober_direct(sp, opt.caps);
      if (!d.sober) {  // hypothesis of the claim; does not occur on this corpus
        fams[family_tag(f)] = {{"not_sober", true}};
        continue;
      }
      // every finite lower-directed subset has a minimum, so enumerating
      // subsets rooted at their minimum is exhaustive for size <= 4
      std::uint64_t checked = 0, failures = 0;
      bool exhaustive = true;
      std::uint64_t budget = opt.directed_subset_budget;
      std::size_t npts = sp.size();
      for (std::size_t p = 0; p < npts && failures == 0 && exhaustive; ++p) {
        BitSet strict = sp.poset.up[p];
        strict.reset(p);
        std::vector<std::uint32_t> above = strict.members();
        std::size_t u = above.size();
        auto verify = [&](const BitSet& z) {
          if (!lower_directed_infimum_check(sp, z)) ++failures;
          ++checked;
        };
        BitSet base(npts);
        base.set(p);
        verify(base);
        if (checked > budget) { exhaustive = false; break; }
        for (std::size_t i = 0; i < u; ++i) {
          BitSet z1 = base;
          z1.set(above[i]);
          verify(z1);
          for (std::size_t j = i + 1; j < u; ++j) {
            BitSet z2 = z1;
            z2.set(above[j]);
            verify(z2);
            for (std::size_t k = j + 1; k < u; ++k) {
              BitSet z3 = z2;
              z3.set(above[k]);
              verify(z3);
            }
          }
          if (checked > budget) { exhaustive = false; break; }
        }
      }
      // all maximal chains are lower directed as well
      std::uint64_t total =
          sp.poset.count_maximal_chains(opt.caps.chain_enumeration_cap);
      std::vector<std::vector<std::uint32_t>> chains;
      bool chains_exhaustive = total <= opt.caps.chain_enumeration_cap;
      if (chains_exhaustive)
        chains = sp.poset.all_maximal_chains(opt.caps.chain_enumeration_cap);
      else
        chains = sp.poset.sample_maximal_chains(1000, fnv64(sp.label, opt.seed ^ 0x1f));
      for (const auto& chain : chains) {
        BitSet z(npts);
        for (auto cpt : chain) z.set(cpt);
        if (!lower_directed_infimum_check(sp, z)) ++failures;
        ++checked;
      }
      ok = ok && failures == 0;
      fams[family_tag(f)] = {{"subsets_checked", checked},
                             {"failures", failures},
                             {"exhaustive", exhaustive && chains_exhaustive}};
    }
    run.add(an->ring().spec_text(), ok, {{"families", fams}});
  }
}

// -- chk-prm-irrid ---------------------------------------------------------------

std::optional<Elem> nontrivial_idempotent(const FiniteRing& r) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    Elem e = static_cast<Elem>(x);
    if (e == r.zero() || e == r.one()) continue;
    if (r.mul(e, e) == e) return e;
  }
  return std::nullopt;
}

void run_prm_irrid(CheckRun& run, CorpusPipelines& pipes, const HarnessOptions&) {
  for (auto& an : pipes.rings) {
    const FiniteRing& r = an->ring();
    bool local = an->is_local();
    std::optional<Elem> e = nontrivial_idempotent(r);
    const IdealSpace& prm = an->space(Family::prm);
    nlohmann::json details{{"local", local}};
    bool ok;
    if (local) {
      // finite local rings are connected: no nontrivial idempotent
      ok = !e.has_value();
      details["has_nontrivial_idempotent"] = e.has_value();
    } else {
      ok = e.has_value();
      if (e) {
        Elem e2 = r.add(r.one(), r.neg(*e));
        IdealId ide = an->lattice().index_of(principal_ideal(r, *e));
        IdealId ide2 = an->lattice().index_of(principal_ideal(r, e2));
        BitSet c1 = subbasic_closed(prm, ide);
        BitSet c2 = subbasic_closed(prm, ide2);
        BitSet all = BitSet::full(prm.size());
        bool covers = (c1 | c2) == all;
        bool proper1 = !(c1 == all);
        bool proper2 = !(c2 == all);
        IrreducibilityResult ir = is_irreducible(prm, all, prm.size() <= 10);
        ok = covers && proper1 && proper2 && !ir.irreducible;
        details["idempotent"] = r.element_name(*e);
        details["cover_traces"] = {{"e_trace_size", c1.count()},
                                   {"e2_trace_size", c2.count()},
                                   {"covers", covers},
                                   {"both_proper", proper1 && proper2}};
        details["prm_irreducible"] = ir.irreducible;
        if (ir.witness_pair)
          details["witness_pair"] = {an->lattice().ideal_name(prm.points[ir.witness_pair->first]),
                                     an->lattice().ideal_name(prm.points[ir.witness_pair->second])};
      }
    }
    run.add(r.spec_text(), ok, std::move(details));
  }
}

// -- chk-prm-sober ---------------------------------------------------------------

void run_prm_sober(CheckRun& run, CorpusPipelines& pipes, const HarnessOptions& opt) {
  for (auto& an : pipes.rings) {
    const IdealSpace& prm = an->space(Family::prm);
    SobernessVerdict d = is_sober_direct(prm, opt.caps);
    SobernessVerdict c = is_sober_criterion(prm);
    SpectralityCertificate cert = is_spectral_finite(prm, opt.caps);
    bool ok = d.sober && c.sober && cert.spectral;
    nlohmann::json details{{"sober_direct", d.sober},
                           {"sober_criterion", c.sober},
                           {"spectral", cert.spectral}};
    if (!ok) {
      details["direct_verdict"] = soberness_to_json(d, an->lattice());
      details["criterion_verdict"] = soberness_to_json(c, an->lattice());
    }
    run.add(an->ring().spec_text(), ok, std::move(details));
  }
}

// -- order isomorphism helper for prm-loc / quot-homeo ----------------------------

struct OrderIsoResult {
  bool defined = true;      // every image lands in the target primary space
  bool injective = true;
  bool surjective = true;
  bool order_iso = true;
  bool ok() const { return defined && injective && surjective && order_iso; }
  nlohmann::json to_json() const {
    return {{"defined", defined},
            {"injective", injective},
            {"surjective", surjective},
            {"order_isomorphism", order_iso}};
  }
};

/// Checks that projecting the ideals in `source_ids` (lattice ids of the
/// base ring) yields exactly the primary ideals of the image ring, strictly
/// respecting containment both ways.
OrderIsoResult check_projection_order_iso(const IdealLattice& lat,
                                          const std::vector<IdealId>& source_ids,
                                          const RingSurjection& surj,
                                          const IdealLattice& target_lat,
                                          const IdealClassification& target_cls) {
  OrderIsoResult res;
  std::vector<IdealId> images;
  for (IdealId a : source_ids) {
    BitSet img = project_set(lat.ideals[a], surj.projection, surj.ring.size());
    auto it = target_lat.index_of_set.find(img);
    if (it == target_lat.index_of_set.end()) {
      res.defined = false;
      return res;
    }
    if (!target_cls.primary[it->second]) res.defined = false;
    images.push_back(it->second);
  }
  std::set<IdealId> distinct(images.begin(), images.end());
  res.injective = distinct.size() == images.size();
  std::set<IdealId> target_primaries;
  for (IdealId t = 0; t < target_lat.count(); ++t)
    if (target_cls.primary[t]) target_primaries.insert(t);
  res.surjective = distinct == target_primaries;
  for (std::size_t i = 0; i < source_ids.size() && res.order_iso; ++i)
    for (std::size_t j = 0; j < source_ids.size(); ++j) {
      bool src = lat.leq(source_ids[i], source_ids[j]);
      bool dst = target_lat.leq(images[i], images[j]);
      if (src != dst) {
        res.order_iso = false;
        break;
      }
    }
  return res;
}

// -- chk-prm-loc -------------------------------------------------------------------

void run_prm_loc(CheckRun& run, CorpusPipelines& pipes, const HarnessOptions& opt) {
  for (auto& an : pipes.rings) {
    const IdealLattice& lat = an->lattice();
    const IdealClassification& cls = an->classification();
    bool ok = true;
    nlohmann::json entries = nlohmann::json::array();
    for (IdealId m = 0; m < lat.count(); ++m) {
      if (!cls.maximal[m]) continue;
      RingSurjection loc = localize_at_maximal(lat.ring, lat.ideals[m]);
      IdealLattice loc_lat = enumerate_ideals(loc.ring, opt.caps);
      IdealClassification loc_cls = classify(loc_lat);
      // the localized ring must be local
      std::size_t loc_maximal = 0;
      for (IdealId t = 0; t < loc_lat.count(); ++t)
        if (loc_cls.maximal[t]) ++loc_maximal;
      // primary ideals of R contained in m
      std::vector<IdealId> source;
      for (IdealId a = 0; a < lat.count(); ++a)
        if (cls.primary[a] && lat.leq(a, m)) source.push_back(a);
      OrderIsoResult iso = check_projection_order_iso(lat, source, loc, loc_lat, loc_cls);
      // Prm(R_m) sober both ways
      auto loc_lat_ptr = std::make_shared<IdealLattice>(std::move(loc_lat));
      IdealSpace loc_prm = build_space(loc_lat_ptr, loc_cls, Family::prm);
      SobernessVerdict d = is_sober_direct(loc_prm, opt.caps);
      SobernessVerdict c = is_sober_criterion(loc_prm);
      bool entry_ok = loc_maximal == 1 && iso.ok() && d.sober && c.sober;
      ok = ok && entry_ok;
      entries.push_back({{"maximal", lat.ideal_name(m)},
                         {"localization_size", loc.ring.size()},
                         {"local", loc_maximal == 1},
                         {"iso", iso.to_json()},
                         {"prm_sober", d.sober && c.sober},
                         {"ok", entry_ok}});
    }
    run.add(lat.ring.spec_text(), ok, {{"maximal_ideals", entries}});
  }
}

// -- chk-quot-homeo ------------------------------------------------------------------

void run_quot_homeo(CheckRun& run, CorpusPipelines& pipes, const HarnessOptions& opt) {
  for (auto& an : pipes.rings) {
    const IdealLattice& lat = an->lattice();
    const IdealClassification& cls = an->classification();
    bool ok = true;
    std::uint64_t checked = 0;
    nlohmann::json failures = nlohmann::json::array();
    for (IdealId a = 0; a < lat.count(); ++a) {
      if (a == lat.top) {
        // R/R is the zero ring: no primary ideal contains R and the zero
        // ring has none, so the correspondence is the empty bijection
        bool trivially_ok = true;
        for (IdealId i = 0; i < lat.count(); ++i)
          if (cls.primary[i] && lat.leq(a, i)) trivially_ok = false;
        ++checked;
        if (!trivially_ok) {
          ok = false;
          failures.push_back({{"ideal", lat.ideal_name(a)}, {"iso", "unit ideal"}});
        }
        continue;
      }
      RingSurjection q = quotient_ring(lat.ring, lat.ideals[a]);
      IdealLattice q_lat = enumerate_ideals(q.ring, opt.caps);
      IdealClassification q_cls = classify(q_lat);
      std::vector<IdealId> source;
      for (IdealId i = 0; i < lat.count(); ++i)
        if (cls.primary[i] && lat.leq(a, i)) source.push_back(i);
      OrderIsoResult iso = check_projection_order_iso(lat, source, q, q_lat, q_cls);
      ++checked;
      if (!iso.ok()) {
        ok = false;
        failures.push_back({{"ideal", lat.ideal_name(a)}, {"iso", iso.to_json()}});
      }
    }
    run.add(lat.ring.spec_text(), ok, {{"ideals_checked", checked}, {"failures", failures}});
  }
}

// -- chk-z ---------------------------------------------------------------------------

void run_z(CheckRun& run, const HarnessOptions& opt) {
  RegZCertificate cert = reg_z_not_sober_certificate(opt.z_bound);
  PrmZVerdict verdict = prm_z_sober_bounded(opt.z_bound);
  bool ok = cert.irreducible && cert.intersection_is_zero && cert.x_radical_outside_space &&
            !cert.sober && verdict.sober_bounded;
  run.add("Z", ok,
          {{"reg_z", reg_z_certificate_to_json(cert)}, {"prm_z", prm_z_verdict_to_json(verdict)}});
}

// -- chk-adversarial -------------------------------------------------------------------

void run_adversarial(CheckRun& run, const HarnessOptions&) {
  for (const ClosedSystem& sys : adversarial_fixtures()) {
    SystemSobernessVerdict v = system_soberness(sys);
    bool detected = !v.sober && v.witness_closed.has_value();
    nlohmann::json details{{"sober", v.sober}};
    if (v.witness_closed) {
      const BitSet& w = sys.closed[*v.witness_closed];
      // re-validate the witness definitionally: irreducible, and no point
      // closure reproduces it
      bool irreducible = system_irreducible(sys, w);
      bool no_generic = true;
      w.for_each([&](std::size_t p) {
        if (v.point_closures[p] == w) no_generic = false;
      });
      detected = detected && irreducible && no_generic;
      nlohmann::json names = nlohmann::json::array();
      w.for_each([&](std::size_t p) { names.push_back(sys.point_names[p]); });
      details["witness_members"] = names;
      details["witness_irreducible"] = irreducible;
      details["witness_has_no_generic_point"] = no_generic;
    }
    run.add(sys.label, detected, std::move(details));
  }
  for (const ClosedSystem& sys : control_fixtures()) {
    SystemSobernessVerdict v = system_soberness(sys);
    run.add(sys.label, v.sober, {{"sober", v.sober}, {"control", true}});
  }
}

}  // namespace

TheoremReport run_check(CheckId id, CorpusPipelines& pipes, const HarnessOptions& opt) {
  CheckRun run(id);
  auto start = std::chrono::steady_clock::now();
  switch (id) {
    case CheckId::sober_eq: run_sober_eq(run, pipes, opt); break;
    case CheckId::qc_eq: run_qc_eq(run, pipes, opt); break;
    case CheckId::qc_cor: run_qc_cor(run, pipes, opt); break;
    case CheckId::chain: run_chain(run, pipes, opt); break;
    case CheckId::noeth: run_noeth(run, pipes, opt); break;
    case CheckId::spectral_sober: run_spectral_sober(run, pipes, opt); break;
    case CheckId::inf: run_inf(run, pipes, opt); break;
    case CheckId::prm_irrid: run_prm_irrid(run, pipes, opt); break;
    case CheckId::prm_sober: run_prm_sober(run, pipes, opt); break;
    case CheckId::prm_loc: run_prm_loc(run, pipes, opt); break;
    case CheckId::quot_homeo: run_quot_homeo(run, pipes, opt); break;
    case CheckId::z_example: run_z(run, opt); break;
    case CheckId::adversarial: run_adversarial(run, opt); break;
  }
  if (id != CheckId::z_example && id != CheckId::adversarial)
    for (const RingVerdict& s : pipes.skipped) run.skip(s);
  run.report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run.report;
}

std::vector<TheoremReport> run_checks(std::span<const CheckId> checks, const CorpusSpec& corpus,
                                      const HarnessOptions& opt) {
  bool needs_corpus = false;
  for (CheckId id : checks)
    if (id != CheckId::z_example && id != CheckId::adversarial) needs_corpus = true;
  std::vector<RingSpec> specs = needs_corpus ? generate_corpus(corpus) : std::vector<RingSpec>{};
  HarnessOptions effective = opt;
  effective.seed = fnv64("corpus-seed", corpus.seed) ^ opt.seed;  // both seeds participate
  CorpusPipelines pipes = build_pipelines(specs, effective);
  std::vector<TheoremReport> out;
  for (CheckId id : checks) out.push_back(run_check(id, pipes, effective));
  return out;
}

std::string summary_table(const std::vector<TheoremReport>& reports, bool with_timing) {
  std::ostringstream os;
  os << "check                 pass  fail  skip";
  if (with_timing) os << "   seconds";
  os << "\n";
  for (const TheoremReport& r : reports) {
    os << r.check;
    for (std::size_t i = r.check.size(); i < 22; ++i) os << ' ';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%4llu  %4llu  %4llu",
                  static_cast<unsigned long long>(r.pass),
                  static_cast<unsigned long long>(r.fail),
                  static_cast<unsigned long long>(r.skip));
    os << buf;
    if (with_timing) {
      std::snprintf(buf, sizeof buf, "   %7.2f", r.seconds);
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace idealspaces
