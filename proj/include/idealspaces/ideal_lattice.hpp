#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "idealspaces/ring.hpp"

namespace idealspaces {

using IdealId = std::uint32_t;

/// The complete lattice of ideals of a finite ring. Ideals are element sets
/// in canonical order (cardinality, then lexicographic member list), so
/// index 0 is the zero ideal and the last index is R. Immutable after
/// construction.
struct IdealLattice {
  FiniteRing ring;
  std::vector<BitSet> ideals;
  std::unordered_map<BitSet, IdealId, BitSetHash> index_of_set;
  std::vector<BitSet> up;    // up[i] = { j : ideals[i] subseteq ideals[j] }, includes i
  std::vector<BitSet> down;  // transpose of up
  std::vector<BitSet> covers;  // upper covers in the containment order
  std::vector<std::vector<Elem>> min_gens;  // greedy smallest generating sets
  std::vector<BitSet> element_powers;       // element x -> { x^k : k >= 1 }
  IdealId bottom = 0, top = 0;

  std::size_t count() const { return ideals.size(); }
  bool leq(IdealId i, IdealId j) const { return up[i].test(j); }

  /// Join in the lattice: index of ideals[i] + ideals[j].
  IdealId sum(IdealId i, IdealId j) const;
  /// Meet in the lattice: index of ideals[i] intersect ideals[j].
  IdealId meet(IdealId i, IdealId j) const;

  /// Index lookup; throws PreconditionError when the set is not an ideal of
  /// the lattice.
  IdealId index_of(const BitSet& set) const;

  /// Short display form: "(g1,g2)" from the stored minimal generators.
  std::string ideal_name(IdealId i) const;
};

/// Smallest ideal containing x, computed as { r*x : r in R }.
BitSet principal_ideal(const FiniteRing& r, Elem x);

/// Greedy smallest generating set, least canonical indices first.
std::vector<Elem> minimal_generators(const FiniteRing& r, const BitSet& ideal);

/// Sum of the principal ideals of the generators. Agrees with
/// ideal_closure; the two routes are independent implementations.
BitSet ideal_from_generators(const FiniteRing& r, std::span<const Elem> gens);

/// Sum of two ideals as element sets: the union of J-translates of I.
BitSet ideal_sum_sets(const FiniteRing& r, const BitSet& i, const BitSet& j);

/// Ideal generated by pairwise products.
BitSet ideal_product_sets(const FiniteRing& r, const BitSet& i, const BitSet& j);

/// { x : x^k in i for some k >= 1 }.
BitSet radical_of_set(const FiniteRing& r, const BitSet& i);

/// Enumerates every ideal by closing the principal ideals under binary sum
/// (in a finite ring every ideal is a finite sum of principal ideals).
/// Throws ResourceError when the ideal count exceeds caps.ideal_cap.
IdealLattice enumerate_ideals(const FiniteRing& r, const Caps& caps = Caps{});

/// Per-ideal classification flags, all computed from first principles and
/// indexed by lattice ideal id.
struct IdealClassification {
  std::vector<char> prime, maximal, primary, radical, irreducible, strongly_irreducible,
      completely_irreducible, nilpotent, nil, principal, regular, minimal, minimal_prime,
      proper, finitely_generated;
  std::vector<IdealId> radical_index;  // id of sqrt(I)

  bool flag(const std::string& name, IdealId i) const;
};

IdealClassification classify(const IdealLattice& lat);

/// Longest chain length (in edges) of the prime-containment order.
int krull_dimension(const IdealLattice& lat, const IdealClassification& cls);

/// Ideal product by lattice index.
IdealId ideal_product(const IdealLattice& lat, IdealId i, IdealId j);

/// Radical by lattice index, verified to land in the lattice.
IdealId radical_of(const IdealLattice& lat, IdealId i);

nlohmann::json lattice_to_json(const IdealLattice& lat, const IdealClassification& cls);

}  // namespace idealspaces
