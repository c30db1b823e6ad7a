#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "idealspaces/caps.hpp"
#include "idealspaces/errors.hpp"

#include "json.hpp"

namespace idealspaces {

/// Ideal of Z encoded by its nonnegative generator: 0 -> (0), 1 -> Z,
/// n >= 2 -> nZ. Containment is reversed divisibility (mZ inside nZ iff
/// n | m, with 0 divisible by everything), sum is gcd, intersection is lcm,
/// product is the plain product and the radical is the squarefree kernel.
struct ZIdeal {
  std::uint64_t n = 0;
};

bool z_contains(ZIdeal outer, ZIdeal inner);  // inner subseteq outer
ZIdeal z_sum(ZIdeal a, ZIdeal b);
ZIdeal z_intersect(ZIdeal a, ZIdeal b);
ZIdeal z_product(ZIdeal a, ZIdeal b);
ZIdeal z_radical(ZIdeal a, std::uint64_t factor_limit = 1000000);

/// Prime factorization by deterministic trial division. Throws
/// ResourceError when n exceeds factor_limit (no probabilistic primality in
/// correctness-bearing paths).
std::vector<std::pair<std::uint64_t, std::uint32_t>> z_factor(std::uint64_t n,
                                                              std::uint64_t factor_limit);

struct ZClassification {
  bool prime = false;          // n = 0 or n prime
  bool maximal = false;        // n prime
  bool primary = false;        // n = 0 or a prime power
  bool regular_proper = false; // n >= 2
  bool radical = false;        // n = 0 or squarefree
};

ZClassification z_classify(ZIdeal i, std::uint64_t factor_limit = 1000000);

/// Divisors of n in ascending order, i.e. the generators of the up-set of
/// nZ in Idl(Z). Throws PreconditionError for n = 0 (infinite up-set).
std::vector<std::uint64_t> z_upset(std::uint64_t n);

/// Least prime dividing neither n nor m. Certifies that pZ lies in Reg(Z)
/// outside {nZ}^ and {mZ}^, so any two subbasic open traces of Reg(Z) meet.
std::uint64_t reg_z_irreducibility_witness(std::uint64_t n, std::uint64_t m);

/// Certificate that Reg(Z) is irreducible but not sober. Every witness is
/// validated in memory over the whole range; explicit witness triples are
/// serialized only up to explicit_bound to keep files reviewable.
struct RegZCertificate {
  std::uint64_t bound = 0;
  std::uint64_t explicit_bound = 0;
  // (a) irreducibility: least witness prime per subbasic pair
  std::uint64_t pairs_checked = 0;
  std::uint64_t max_witness_prime = 0;
  std::map<std::uint64_t, std::uint64_t> witness_histogram;  // prime -> pair count
  std::vector<std::array<std::uint64_t, 3>> explicit_pairs;  // (n, m, p)
  bool irreducible = false;
  // (b) intersection of all members is (0): every nonzero candidate kZ gets
  // a prime p with p not dividing k, so kZ is not inside pZ
  std::uint64_t candidates_refuted = 0;
  std::vector<std::array<std::uint64_t, 2>> explicit_candidates;  // (k, p)
  bool intersection_is_zero = false;
  // conclusion: the Reg(Z)-radical of (0) is (0), which is not a member
  bool x_radical_outside_space = false;
  bool sober = true;
};

RegZCertificate reg_z_not_sober_certificate(std::uint64_t bound,
                                            std::uint64_t explicit_bound = 100);

/// Bounded soberness verdict for Prm(Z): for every 1 <= n <= bound the
/// finite trace Prm(Z) ∩ {nZ}^ is computed exactly; irreducible traces must
/// have their X-radical inside Prm(Z). The n = 0 whole-space case is
/// certified separately (irreducibility witnesses plus (0) being primary).
struct PrmZVerdict {
  std::uint64_t bound = 0;
  std::uint64_t traces_checked = 0;
  std::uint64_t irreducible_traces = 0;
  bool all_irreducible_traces_ok = false;
  bool whole_space_irreducible = false;
  bool whole_space_radical_primary = false;
  bool sober_bounded = false;
  std::vector<std::array<std::uint64_t, 2>> explicit_traces;  // (n, x_radical) for irreducible
};

PrmZVerdict prm_z_sober_bounded(std::uint64_t bound, std::uint64_t explicit_bound = 100);

nlohmann::json reg_z_certificate_to_json(const RegZCertificate& c);
nlohmann::json prm_z_verdict_to_json(const PrmZVerdict& v);

}  // namespace idealspaces
