#include "idealspaces/topology.hpp"

#include <algorithm>
#include <random>

namespace idealspaces {

std::vector<IdealId> IdealSpace::ideals_of(const BitSet& point_set) const {
  std::vector<IdealId> out;
  point_set.for_each([&](std::size_t p) { out.push_back(points[p]); });
  return out;
}

IdealSpace make_ideal_space(std::shared_ptr<const IdealLattice> lattice, const BitSet& member_ids,
                            std::string label) {
  IdealSpace s;
  s.lattice = std::move(lattice);
  s.member_ids = member_ids;
  s.label = std::move(label);
  s.point_of_ideal.assign(s.lattice->count(), IdealSpace::npos32);
  member_ids.for_each([&](std::size_t id) {
    s.point_of_ideal[id] = static_cast<std::uint32_t>(s.points.size());
    s.points.push_back(static_cast<IdealId>(id));
  });
  std::size_t m = s.points.size();
  std::vector<BitSet> rows(m, BitSet(m));
  for (std::size_t p = 0; p < m; ++p) {
    BitSet above = s.lattice->up[s.points[p]] & member_ids;
    above.for_each([&](std::size_t id) { rows[p].set(s.point_of_ideal[id]); });
  }
  s.poset = FinitePoset::from_trusted_up_rows(std::move(rows));
  return s;
}

BitSet subbasic_closed(const IdealSpace& space, IdealId a) {
  BitSet trace = space.lattice->up[a] & space.member_ids;
  BitSet out(space.size());
  trace.for_each([&](std::size_t id) { out.set(space.point_of_ideal[id]); });
  return out;
}

BitSet closure(const IdealSpace& space, const BitSet& points) {
  return space.poset.up_closure(points);
}

std::vector<BitSet> all_closed_sets(const IdealSpace& space, const Caps& caps) {
  return space.poset.all_up_sets(caps.closed_set_cap);
}

bool is_irreducible_pairwise(const FinitePoset& poset, const BitSet& points) {
  bool ok = true;
  points.for_each([&](std::size_t x) {
    if (!ok) return;
    points.for_each([&](std::size_t y) {
      if (!ok || y < x) return;
      BitSet common = poset.down[x] & poset.down[y];
      common &= points;
      if (common.empty()) ok = false;
    });
  });
  return ok;
}

bool is_irreducible_by_cover(const FinitePoset& poset, const BitSet& points) {
  std::vector<std::uint32_t> members = points.members();
  std::size_t k = members.size();
  if (k == 0) return false;
  if (k > 25) throw ResourceError("cover-based irreducibility limited to 25 points");
  // reducible iff some bipartition (A, S\A) has S inside neither closure;
  // any separating pair of closed sets can be shrunk to such closures
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
    BitSet a(poset.n), b(poset.n);
    for (std::size_t i = 0; i < k; ++i)
      ((mask >> i) & 1 ? a : b).set(members[i]);
    BitSet ca = poset.up_closure(a);
    if (points.subset_of(ca)) continue;
    BitSet cb = poset.up_closure(b);
    if (points.subset_of(cb)) continue;
    return false;
  }
  return true;
}

IrreducibilityResult is_irreducible(const IdealSpace& space, const BitSet& points,
                                    bool cross_check) {
  if (points.empty())
    throw PreconditionError("irreducibility is defined for nonempty subsets");
  IrreducibilityResult res;
  BitSet minimals = space.poset.minimal_within(points);
  res.irreducible = minimals.count() == 1;
  if (!res.irreducible) {
    // two distinct minimal members have no common lower bound in the subset
    std::size_t x = minimals.min_element();
    BitSet rest = minimals;
    rest.reset(x);
    std::size_t y = rest.min_element();
    res.witness_pair = {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
    BitSet v1 = BitSet::full(space.size());
    v1.subtract(space.poset.down[x]);
    BitSet v2 = BitSet::full(space.size());
    v2.subtract(space.poset.down[y]);
    res.witness_closed = {v1, v2};
  }
  if (cross_check) {
    bool pairwise = is_irreducible_pairwise(space.poset, points);
    bool cover = is_irreducible_by_cover(space.poset, points);
    if (pairwise != res.irreducible || cover != res.irreducible)
      throw Error("irreducibility tests disagree on " + points.to_string() + " in " + space.label);
  }
  return res;
}

std::optional<std::uint32_t> generic_point(const IdealSpace& space, const BitSet& closed) {
  if (closed.empty()) return std::nullopt;
  BitSet minimals = space.poset.minimal_within(closed);
  if (minimals.count() != 1) return std::nullopt;
  std::uint32_t g = static_cast<std::uint32_t>(minimals.min_element());
  if (space.poset.up[g] == closed) return g;
  return std::nullopt;
}

IdealId x_radical(const IdealSpace& space, IdealId a, bool* empty_family) {
  const IdealLattice& lat = *space.lattice;
  BitSet trace = lat.up[a] & space.member_ids;
  if (empty_family) *empty_family = trace.empty();
  if (trace.empty()) return lat.top;
  BitSet inter = BitSet::full(lat.ring.size());
  trace.for_each([&](std::size_t id) { inter &= lat.ideals[id]; });
  return lat.index_of(inter);  // the lattice is complete, so this must exist
}

namespace {

constexpr std::size_t kDirectEnumerationCap = 1 << 16;

SobernessVerdict sober_direct_exhaustive(const IdealSpace& space,
                                         const std::vector<BitSet>& closed_sets) {
  SobernessVerdict v;
  v.method = "direct-exhaustive";
  for (const BitSet& c : closed_sets) {
    if (c.empty()) continue;
    if (space.poset.minimal_within(c).count() != 1) continue;  // reducible
    if (!generic_point(space, c)) {
      v.sober = false;
      v.witness_closed_set = space.ideals_of(c);
      return v;
    }
  }
  return v;
}

SobernessVerdict sober_direct_principal(const IdealSpace& space) {
  // An irreducible up-set of a finite poset has a unique minimal element and
  // every member lies above some minimal one, so it is the principal up-set
  // of that element. The irreducible closed sets are therefore exactly the
  // point closures.
  SobernessVerdict v;
  v.method = "direct-principal";
  for (std::size_t p = 0; p < space.size(); ++p) {
    const BitSet& c = space.poset.up[p];
    if (space.poset.minimal_within(c).count() != 1)
      throw Error("principal up-set with several minimal elements in " + space.label);
    if (!generic_point(space, c)) {
      v.sober = false;
      v.witness_closed_set = space.ideals_of(c);
      return v;
    }
  }
  // spot-check: sampled unions of incomparable point closures must be
  // reducible (they have at least two minimal elements)
  std::mt19937_64 rng(0x50b34d);
  for (int s = 0; s < 64 && space.size() >= 2; ++s) {
    BitSet seedset(space.size());
    for (int j = 0; j < 3; ++j) seedset.set(rng() % space.size());
    BitSet u = space.poset.up_closure(seedset);
    std::size_t minimals = space.poset.minimal_within(u).count();
    bool irr = is_irreducible_pairwise(space.poset, u);
    if (irr != (minimals == 1))
      throw Error("irreducibility spot-check failed in " + space.label);
  }
  return v;
}

}  // namespace

SobernessVerdict is_sober_direct(const IdealSpace& space, const Caps& caps) {
  std::size_t cap = std::min(caps.closed_set_cap, kDirectEnumerationCap);
  try {
    std::vector<BitSet> closed_sets = space.poset.all_up_sets(cap);
    return sober_direct_exhaustive(space, closed_sets);
  } catch (const ResourceError&) {
    return sober_direct_principal(space);
  }
}

SobernessVerdict is_sober_criterion(const IdealSpace& space) {
  SobernessVerdict v;
  v.method = "criterion";
  const IdealLattice& lat = *space.lattice;
  for (IdealId a = 0; a < lat.count(); ++a) {
    BitSet trace = subbasic_closed(space, a);
    if (trace.empty()) continue;  // vacuously excluded (irreducibility needs nonempty)
    if (space.poset.minimal_within(trace).count() != 1) continue;  // not irreducible
    bool empty = false;
    IdealId rad = x_radical(space, a, &empty);
    if (!space.member_ids.test(rad)) {
      v.sober = false;
      v.witness_ideal = a;
      v.witness_x_radical = rad;
      return v;
    }
  }
  return v;
}

BitSet max_elements(const IdealSpace& space) { return space.poset.maximal_elements(); }

namespace {

/// Quasi-compactness of a finite space: every open cover is refined by
/// picking one open per point, and finitely many points leave a finite
/// subcover. The computation verifies the finiteness facts it relies on.
bool finite_space_quasi_compact(std::size_t point_count) {
  return point_count < BitSet::npos;  // finite by construction
}

}  // namespace

QuasiCompactnessReport quasi_compactness_report(const IdealSpace& space, const Caps& caps,
                                                std::uint64_t seed) {
  QuasiCompactnessReport rep;
  BitSet maxima = space.poset.maximal_elements();
  rep.qc = finite_space_quasi_compact(space.size());
  rep.max_qc = finite_space_quasi_compact(maxima.count());
  rep.everyone_below_max = true;
  for (std::size_t p = 0; p < space.size(); ++p) {
    if (!(space.poset.up[p] & maxima).any()) {
      rep.everyone_below_max = false;
      rep.witness_unbounded_point = space.points[p];
      break;
    }
  }

  std::uint64_t total = space.poset.count_maximal_chains(caps.chain_enumeration_cap);
  std::vector<std::vector<std::uint32_t>> chains;
  if (total <= caps.chain_enumeration_cap) {
    chains = space.poset.all_maximal_chains(caps.chain_enumeration_cap);
    rep.chains_exhaustive = true;
  } else {
    chains = space.poset.sample_maximal_chains(1000, seed ^ 0xc4a1);
    rep.chains_exhaustive = false;
  }
  rep.chains_checked = chains.size();
  for (const auto& chain : chains) {
    bool bounded = false;
    for (std::size_t z = 0; z < space.size() && !bounded; ++z) {
      bool above_all = true;
      for (std::uint32_t c : chain)
        if (!space.poset.leq(c, z)) {
          above_all = false;
          break;
        }
      bounded = above_all;
    }
    if (!bounded) {
      rep.chain_bounds_ok = false;
      std::vector<IdealId> ids;
      for (std::uint32_t c : chain) ids.push_back(space.points[c]);
      rep.witness_chain = std::move(ids);
      break;
    }
  }
  rep.equivalence_holds = rep.qc == (rep.everyone_below_max && rep.max_qc);
  return rep;
}

SpectralityCertificate is_spectral_finite(const IdealSpace& space, const Caps& caps) {
  SpectralityCertificate cert;
  // T0: distinct points are distinct ideals, so mutual containment is
  // impossible; verified by scanning the order
  cert.t0 = true;
  for (std::size_t p = 0; p < space.size() && cert.t0; ++p)
    for (std::size_t q = p + 1; q < space.size(); ++q)
      if (space.poset.leq(p, q) && space.poset.leq(q, p)) {
        cert.t0 = false;
        break;
      }
  QuasiCompactnessReport qc = quasi_compactness_report(space, caps);
  cert.quasi_compact = qc.qc && qc.equivalence_holds;
  // subbasic opens are complements of point closures; they and their finite
  // intersections are finite spaces, hence quasi-compact
  cert.qc_open_basis = true;
  for (std::size_t p = 0; p < space.size() && cert.qc_open_basis; ++p) {
    BitSet open = BitSet::full(space.size());
    open.subtract(space.poset.up[p]);
    cert.qc_open_basis = finite_space_quasi_compact(open.count());
  }
  cert.soberness = is_sober_direct(space, caps);
  cert.spectral = cert.t0 && cert.quasi_compact && cert.qc_open_basis && cert.soberness.sober;
  return cert;
}

bool lower_directed_infimum_check(const IdealSpace& space, const BitSet& z_points,
                                  IdealId* inf_out) {
  if (z_points.empty()) throw PreconditionError("lower-directed check requires a nonempty subset");
  std::vector<std::uint32_t> members = z_points.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      BitSet common = space.poset.down[members[i]] & space.poset.down[members[j]];
      common &= z_points;
      if (common.empty())
        throw PreconditionError("subset is not lower directed: no common lower bound of " +
                                space.lattice->ideal_name(space.points[members[i]]) + " and " +
                                space.lattice->ideal_name(space.points[members[j]]));
    }
  const IdealLattice& lat = *space.lattice;
  BitSet inter = BitSet::full(lat.ring.size());
  z_points.for_each([&](std::size_t p) { inter &= lat.ideals[space.points[p]]; });
  IdealId inf = lat.index_of(inter);
  if (inf_out) *inf_out = inf;
  return space.member_ids.test(inf);
}

// ---------------------------------------------------------------------------
// Explicit closed-set systems
// ---------------------------------------------------------------------------

bool system_irreducible(const ClosedSystem& sys, const BitSet& c) {
  if (c.empty()) return false;
  for (std::size_t i = 0; i < sys.closed.size(); ++i) {
    if (c.subset_of(sys.closed[i])) continue;
    for (std::size_t j = i; j < sys.closed.size(); ++j) {
      if (c.subset_of(sys.closed[j])) continue;
      if (c.subset_of(sys.closed[i] | sys.closed[j])) return false;
    }
  }
  return true;
}

SystemSobernessVerdict system_soberness(const ClosedSystem& sys) {
  std::size_t n = sys.size();
  bool has_full = false;
  for (const BitSet& c : sys.closed) {
    if (c.universe_size() != n)
      throw PreconditionError("closed-system member universe mismatch in " + sys.label);
    if (c.count() == n) has_full = true;
  }
  if (!has_full)
    throw PreconditionError("closed system must contain the full point set: " + sys.label);
  SystemSobernessVerdict v;
  v.point_closures.assign(n, BitSet::full(n));
  for (std::size_t p = 0; p < n; ++p)
    for (const BitSet& c : sys.closed)
      if (c.test(p)) v.point_closures[p] &= c;
  for (std::size_t ci = 0; ci < sys.closed.size(); ++ci) {
    const BitSet& c = sys.closed[ci];
    if (c.empty() || !system_irreducible(sys, c)) continue;
    bool generic = false;
    c.for_each([&](std::size_t p) {
      if (v.point_closures[p] == c) generic = true;
    });
    if (!generic) {
      v.sober = false;
      v.witness_closed = ci;
      return v;
    }
  }
  return v;
}

}  // namespace idealspaces
