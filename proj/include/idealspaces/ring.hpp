#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "idealspaces/bitset.hpp"
#include "idealspaces/caps.hpp"
#include "idealspaces/errors.hpp"

#include "json.hpp"

namespace idealspaces {

using Elem = std::uint32_t;

// ---------------------------------------------------------------------------
// Ring specifications
// ---------------------------------------------------------------------------

struct RingSpec;

/// Z/nZ, n >= 2.
struct ZmodSpec {
  std::uint64_t n = 0;
};

/// GF(p)[x]/(f) with f monic of degree >= 1, coefficients c0..cd (cd = 1).
struct PolyQuotSpec {
  std::uint64_t p = 0;
  std::vector<std::uint32_t> coeffs;
};

/// Direct product of one or more rings.
struct ProductSpec {
  std::vector<RingSpec> factors;
};

/// Quotient of a base ring by the ideal generated by element indices.
struct QuotientSpec {
  std::shared_ptr<const RingSpec> base;
  std::vector<Elem> gens;
};

struct RingSpec {
  std::variant<ZmodSpec, PolyQuotSpec, ProductSpec, QuotientSpec> ast;

  static RingSpec zmod(std::uint64_t n) { return {ZmodSpec{n}}; }
  static RingSpec poly_quot(std::uint64_t p, std::vector<std::uint32_t> coeffs) {
    return {PolyQuotSpec{p, std::move(coeffs)}};
  }
  static RingSpec product(std::vector<RingSpec> factors) {
    return {ProductSpec{std::move(factors)}};
  }
  static RingSpec quotient(RingSpec base, std::vector<Elem> gens) {
    return {QuotientSpec{std::make_shared<RingSpec>(std::move(base)), std::move(gens)}};
  }
};

/// Parses the text grammar: `Z/4`, `GF(2)[x]/(x^2)`, `Z/4 x Z/3`,
/// `Z/8 / (4)`. Product `x` binds tighter than the quotient `/ (...)`, and
/// parentheses override. Quotient generators are canonical element indices;
/// tuples `(a,b,...)` are accepted when the base is a product.
RingSpec parse_ring_spec(const std::string& text);
std::string ring_spec_to_text(const RingSpec& spec);

nlohmann::json ring_spec_to_json(const RingSpec& spec);
RingSpec ring_spec_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Realized rings
// ---------------------------------------------------------------------------

/// A finite commutative ring with identity over canonical element indices
/// 0..size-1. Operation tables are row-memoized for sizes <= 4096 (eager for
/// small rings) and computed on the fly above. Immutable after construction;
/// concurrent read-only sharing is safe.
class FiniteRing {
 public:
  struct Kernel;

  std::size_t size() const { return size_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  /// True iff some y satisfies x*y = 1. The witness inverse is stored when
  /// requested.
  bool is_unit(Elem x, Elem* inverse = nullptr) const;

  /// True iff x*y = 0 implies y = 0, decided by scanning all y. Computed
  /// independently of is_unit; in a finite ring the two agree.
  bool is_regular_element(Elem x, Elem* annihilated = nullptr) const;

  /// Memoized operation rows, or nullptr when the ring is too large to cache.
  const Elem* add_row(Elem a) const;
  const Elem* mul_row(Elem a) const;

  const RingSpec& spec() const { return *spec_; }
  std::string spec_text() const;
  std::string element_name(Elem x) const;

  bool operator==(const FiniteRing& o) const { return kernel_ == o.kernel_; }

 private:
  friend FiniteRing build_ring(const RingSpec&, const Caps&);
  friend struct RingBuilder;

  std::shared_ptr<const Kernel> kernel_;
  std::shared_ptr<const RingSpec> spec_;
  std::size_t size_ = 0;
  Elem zero_ = 0, one_ = 0;
};

/// Builds the ring described by `spec`, verifying the ring axioms on
/// construction (exhaustively for size <= 256, on 10^4 sampled triples
/// above). Throws ParseError/PreconditionError on invalid specs and
/// ResourceError when the realized size exceeds the cap.
FiniteRing build_ring(const RingSpec& spec, const Caps& caps = Caps{});

/// Result of forming a quotient: the ring of cosets plus the element-level
/// projection map (old element index -> new element index).
struct RingSurjection {
  FiniteRing ring;
  std::vector<Elem> projection;
};

/// Quotient by an ideal given as an element set. Coset representatives are
/// the minimal canonical indices, so the construction is deterministic.
RingSurjection quotient_ring(const FiniteRing& r, const BitSet& ideal);

/// Localization at a maximal ideal m, realized as r / k where
/// k = { x : s*x = 0 for some s outside m }. For a finite ring the
/// localization map is surjective with exactly this kernel, so the quotient
/// is the localization. Throws PreconditionError when m is not maximal.
RingSurjection localize_at_maximal(const FiniteRing& r, const BitSet& maximal_ideal);

/// Element-level ideal closure: smallest subset containing `gens`, closed
/// under addition and ring multiplication. Self-contained so callers that
/// predate the lattice machinery (quotient specs, maximality checks) do not
/// depend on it.
BitSet ideal_closure(const FiniteRing& r, std::span<const Elem> gens);

/// Image of an element set under an element-level projection into a ring of
/// size `target_size`.
BitSet project_set(const BitSet& s, const std::vector<Elem>& projection, std::size_t target_size);

}  // namespace idealspaces
