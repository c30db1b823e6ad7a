#pragma once

#include <memory>
#include <optional>
#include <string>

#include "idealspaces/ideal_lattice.hpp"
#include "idealspaces/poset.hpp"

namespace idealspaces {

/// A subset of an ideal lattice carrying the subspace coarse lower topology.
/// In a finite poset every up-set is a finite union of principal up-sets and
/// {a}^ ∩ {b}^ = {a+b}^ stays subbasic, so the closed sets of the subspace
/// are exactly the up-sets of the induced order; all operations below work
/// on that induced poset (point indices 0..size-1, ascending lattice ids).
struct IdealSpace {
  std::shared_ptr<const IdealLattice> lattice;
  std::vector<IdealId> points;                // point -> lattice id, ascending
  std::vector<std::uint32_t> point_of_ideal;  // lattice id -> point or npos32
  BitSet member_ids;                          // over lattice ideal ids
  FinitePoset poset;                          // induced containment order
  std::string label;

  static constexpr std::uint32_t npos32 = static_cast<std::uint32_t>(-1);

  std::size_t size() const { return points.size(); }
  IdealId ideal_of(std::size_t point) const { return points[point]; }
  std::vector<IdealId> ideals_of(const BitSet& point_set) const;
};

IdealSpace make_ideal_space(std::shared_ptr<const IdealLattice> lattice, const BitSet& member_ids,
                            std::string label);

/// Trace of the subbasic closed set {a}^ on the space: the points whose
/// ideal contains ideals[a]. `a` may be any ideal of the ambient lattice.
BitSet subbasic_closed(const IdealSpace& space, IdealId a);

/// Smallest closed (up-closed) subset of the space containing `points`.
BitSet closure(const IdealSpace& space, const BitSet& points);

/// Every closed set of the subspace topology. Throws ResourceError past the
/// cap.
std::vector<BitSet> all_closed_sets(const IdealSpace& space, const Caps& caps = Caps{});

struct IrreducibilityResult {
  bool irreducible = false;
  /// On failure: a pair of points with no common lower bound in the subset.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness_pair;
  /// On failure: closed sets V1, V2 covering the subset with neither
  /// containing it (complements of the witness points' down-sets).
  std::optional<std::pair<BitSet, BitSet>> witness_closed;
};

/// Irreducibility of a nonempty subset in the space. Decided by the finite
/// poset test (every pair of members needs a common lower bound inside the
/// subset, equivalently a unique minimal member); `cross_check` additionally
/// runs the closed-cover definition over all bipartitions and asserts
/// agreement (use on small subsets only, cost 2^|subset|).
IrreducibilityResult is_irreducible(const IdealSpace& space, const BitSet& points,
                                    bool cross_check = false);

/// The closed-cover definition evaluated directly: reducible iff some
/// bipartition (A, S\A) has S contained in neither closure. Exponential in
/// |S|; reference implementation for cross-checks.
bool is_irreducible_by_cover(const FinitePoset& poset, const BitSet& points);

/// The raw pairwise-lower-bound loop, kept separate from the fast
/// unique-minimal test for cross-checking.
bool is_irreducible_pairwise(const FinitePoset& poset, const BitSet& points);

/// The unique point whose closure equals `closed`, if any (unique by T0).
std::optional<std::uint32_t> generic_point(const IdealSpace& space, const BitSet& closed);

/// Intersection of all members of the space containing ideals[a], as a
/// lattice id. When no member contains it, returns the top ideal R and sets
/// empty_family.
IdealId x_radical(const IdealSpace& space, IdealId a, bool* empty_family = nullptr);

struct SobernessVerdict {
  bool sober = true;
  std::string method;
  /// direct method, on failure: an irreducible closed set with no generic
  /// point (lattice ids)
  std::optional<std::vector<IdealId>> witness_closed_set;
  /// criterion method, on failure: ideal a with irreducible trace whose
  /// X-radical is outside the space
  std::optional<IdealId> witness_ideal;
  std::optional<IdealId> witness_x_radical;
};

/// Soberness by enumerating irreducible closed sets and checking generic
/// points. Exhaustive over all closed sets when their number is within
/// `caps.closed_set_cap`; otherwise uses the fact that an irreducible up-set
/// of a finite poset has a unique minimal element, hence is a principal
/// up-set, and spot-checks that sampled non-principal up-sets are reducible.
SobernessVerdict is_sober_direct(const IdealSpace& space, const Caps& caps = Caps{});

/// Soberness via the X-radical criterion: for every ideal a of the ambient
/// lattice with nonempty irreducible trace X ∩ {a}^, the X-radical of a must
/// lie in X. Empty traces are vacuously excluded.
SobernessVerdict is_sober_criterion(const IdealSpace& space);

/// Points with no strictly larger member.
BitSet max_elements(const IdealSpace& space);

struct QuasiCompactnessReport {
  bool qc = true;
  bool everyone_below_max = true;
  bool max_qc = true;
  bool chain_bounds_ok = true;
  std::uint64_t chains_checked = 0;
  bool chains_exhaustive = true;
  bool equivalence_holds = true;  // qc == (everyone_below_max && max_qc)
  /// On failure: a point with no maximal member above it / an unbounded
  /// chain, as lattice ids.
  std::optional<IdealId> witness_unbounded_point;
  std::optional<std::vector<IdealId>> witness_chain;
};

/// Quasi-compactness structure. A finite space is quasi-compact (any open
/// cover is refined by one choice of open per point, and there are finitely
/// many points); `qc` and `max_qc` report that computation, while
/// `everyone_below_max` and `chain_bounds_ok` are genuine scans whose
/// agreement with `qc` is recorded in `equivalence_holds`.
QuasiCompactnessReport quasi_compactness_report(const IdealSpace& space,
                                                const Caps& caps = Caps{},
                                                std::uint64_t seed = 0);

struct SpectralityCertificate {
  bool t0 = false;
  bool quasi_compact = false;
  bool qc_open_basis = false;
  SobernessVerdict soberness;
  bool spectral = false;
};

/// Spectrality for a finite T0 space: T0 and quasi-compactness with a basis
/// of quasi-compact opens hold for every finite ideal space (computed,
/// recorded individually), so spectrality reduces to soberness.
SpectralityCertificate is_spectral_finite(const IdealSpace& space, const Caps& caps = Caps{});

/// Verifies z is lower directed (throws PreconditionError naming the first
/// offending pair otherwise), computes inf z as the lattice meet
/// (= intersection of the member ideals) and reports whether it lies in the
/// space.
bool lower_directed_infimum_check(const IdealSpace& space, const BitSet& z_points,
                                  IdealId* inf_out = nullptr);

// ---------------------------------------------------------------------------
// Explicit closed-set systems
// ---------------------------------------------------------------------------

/// A finite set of points with an explicitly given family of closed sets.
/// The family is taken as-is: it models the trace of an infinite space's
/// closed sets on finitely many sample points and need not be closed under
/// union or intersection. This is the entry point the adversarial fixtures
/// use; a family that forms a genuine finite topology is always sober, so
/// only such truncations can exhibit non-soberness.
struct ClosedSystem {
  std::vector<std::string> point_names;
  std::vector<BitSet> closed;  // must contain the full point set
  std::string label;

  std::size_t size() const { return point_names.size(); }
};

struct SystemSobernessVerdict {
  bool sober = true;
  /// Index into `closed` of an irreducible member with no generic point.
  std::optional<std::size_t> witness_closed;
  /// Per-point closures (intersection of the members containing the point).
  std::vector<BitSet> point_closures;
};

/// Evaluates the soberness definition against the family as given:
/// irreducibility quantifies covers over family members, and a generic
/// point of C is a point whose family-closure equals C.
SystemSobernessVerdict system_soberness(const ClosedSystem& sys);

/// Irreducibility of `c` with covers drawn from the family.
bool system_irreducible(const ClosedSystem& sys, const BitSet& c);

}  // namespace idealspaces
