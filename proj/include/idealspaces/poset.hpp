#pragma once

#include <cstdint>
#include <vector>

#include "idealspaces/bitset.hpp"
#include "idealspaces/caps.hpp"
#include "idealspaces/errors.hpp"

namespace idealspaces {

/// Finite poset given by its full order relation. In the coarse lower
/// topology of a finite poset the closed sets are exactly the up-sets, so
/// all topological work reduces to order computations here.
struct FinitePoset {
  std::size_t n = 0;
  std::vector<BitSet> up;    // up[i] = { j : i <= j }, includes i
  std::vector<BitSet> down;  // transpose
  std::vector<BitSet> covers_up;  // upper covers

  /// Builds from up-rows, validating reflexivity, antisymmetry and
  /// transitivity (fixture inputs are untrusted).
  static FinitePoset from_up_rows(std::vector<BitSet> rows);

  /// Builds without validation from rows known to come from a containment
  /// order.
  static FinitePoset from_trusted_up_rows(std::vector<BitSet> rows);

  bool leq(std::size_t i, std::size_t j) const { return up[i].test(j); }

  BitSet maximal_elements() const;
  BitSet minimal_elements() const;
  /// Members of `subset` with no strictly smaller member inside `subset`.
  BitSet minimal_within(const BitSet& subset) const;
  BitSet maximal_within(const BitSet& subset) const;

  BitSet up_closure(const BitSet& s) const;
  bool is_up_set(const BitSet& s) const;

  /// Every up-set (= closed set of the coarse lower topology). Throws
  /// ResourceError past `cap`.
  std::vector<BitSet> all_up_sets(std::size_t cap) const;

  /// Number of up-sets if it does not exceed `cap`, else npos.
  std::size_t count_up_sets_up_to(std::size_t cap) const;

  /// Maximal chains (minimal element to maximal element along covers).
  /// Count saturates at `limit`.
  std::uint64_t count_maximal_chains(std::uint64_t limit) const;
  std::vector<std::vector<std::uint32_t>> all_maximal_chains(std::uint64_t cap) const;
  std::vector<std::vector<std::uint32_t>> sample_maximal_chains(std::size_t k,
                                                               std::uint64_t seed) const;

 private:
  void finish();  // fills down and covers from up
};

}  // namespace idealspaces
