#include "idealspaces/z_ideals.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace idealspaces {

bool z_contains(ZIdeal outer, ZIdeal inner) {
  // mZ inside nZ iff n | m; n | 0 for every n, and 0 | m only for m = 0
  if (outer.n == 0) return inner.n == 0;
  return inner.n % outer.n == 0;
}

ZIdeal z_sum(ZIdeal a, ZIdeal b) { return {std::gcd(a.n, b.n)}; }

ZIdeal z_intersect(ZIdeal a, ZIdeal b) {
  if (a.n == 0 || b.n == 0) return {0};
  return {a.n / std::gcd(a.n, b.n) * b.n};
}

ZIdeal z_product(ZIdeal a, ZIdeal b) { return {a.n * b.n}; }

std::vector<std::pair<std::uint64_t, std::uint32_t>> z_factor(std::uint64_t n,
                                                              std::uint64_t factor_limit) {
  if (n > factor_limit)
    throw ResourceError("z_factor limited to n <= " + std::to_string(factor_limit) +
                        " (deterministic trial division), got " + std::to_string(n));
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

ZIdeal z_radical(ZIdeal a, std::uint64_t factor_limit) {
  if (a.n == 0) return {0};
  std::uint64_t rad = 1;
  for (auto [p, e] : z_factor(a.n, factor_limit)) rad *= p;
  return {rad};
}

ZClassification z_classify(ZIdeal i, std::uint64_t factor_limit) {
  ZClassification c;
  std::uint64_t n = i.n;
  if (n == 0) {
    c.prime = true;  // Z is a domain
    c.primary = true;
    c.radical = true;
    return c;
  }
  if (n == 1) return c;  // the unit ideal: proper-only predicates all false
  auto factors = z_factor(n, factor_limit);
  c.prime = factors.size() == 1 && factors[0].second == 1;
  c.maximal = c.prime;
  c.primary = factors.size() == 1;
  c.regular_proper = true;
  c.radical = std::all_of(factors.begin(), factors.end(), [](auto f) { return f.second == 1; });
  return c;
}

std::vector<std::uint64_t> z_upset(std::uint64_t n) {
  if (n == 0)
    throw PreconditionError("the up-set of (0) is all of Idl(Z); use the whole-space routines");
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    divs.push_back(d);
    if (d != n / d) divs.push_back(n / d);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

namespace {

constexpr std::array<std::uint64_t, 16> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19,
                                                        23, 29, 31, 37, 41, 43, 47, 53};

}  // namespace

std::uint64_t reg_z_irreducibility_witness(std::uint64_t n, std::uint64_t m) {
  // the primorial of the table exceeds 2^64, so some entry misses both
  for (std::uint64_t p : kSmallPrimes)
    if (n % p != 0 && m % p != 0) return p;
  std::uint64_t p = kSmallPrimes.back();
  while (true) {
    p += 2;
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime && n % p != 0 && m % p != 0) return p;
  }
}

RegZCertificate reg_z_not_sober_certificate(std::uint64_t bound, std::uint64_t explicit_bound) {
  if (bound < 2) throw PreconditionError("certificate bound must be >= 2");
  RegZCertificate cert;
  cert.bound = bound;
  cert.explicit_bound = explicit_bound;

  bool all_valid = true;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    for (std::uint64_t m = n; m <= bound; ++m) {
      std::uint64_t p = reg_z_irreducibility_witness(n, m);
      // validation: p prime is structural (table / trial division); p must
      // miss both generators, i.e. pZ avoids both subbasic up-sets
      if (n % p == 0 || m % p == 0) all_valid = false;
      ++cert.pairs_checked;
      cert.max_witness_prime = std::max(cert.max_witness_prime, p);
      ++cert.witness_histogram[p];
      if (n <= explicit_bound && m <= explicit_bound)
        cert.explicit_pairs.push_back({n, m, p});
    }
  }
  cert.irreducible = all_valid;

  // no nonzero proper ideal kZ lies inside every member of Reg(Z): the
  // witness prime p for (k, k) satisfies p not dividing k, so kZ is not
  // inside pZ although pZ is a member
  bool refuted_all = true;
  for (std::uint64_t k = 2; k <= bound; ++k) {
    std::uint64_t p = reg_z_irreducibility_witness(k, k);
    if (k % p == 0) refuted_all = false;
    ++cert.candidates_refuted;
    if (k <= explicit_bound) cert.explicit_candidates.push_back({k, p});
  }
  cert.intersection_is_zero = refuted_all;

  // the Reg(Z)-radical of (0) is the intersection of all members, i.e. (0),
  // and (0) is not regular-proper
  cert.x_radical_outside_space = !z_classify(ZIdeal{0}).regular_proper;
  cert.sober = !(cert.irreducible && cert.intersection_is_zero && cert.x_radical_outside_space);
  return cert;
}

PrmZVerdict prm_z_sober_bounded(std::uint64_t bound, std::uint64_t explicit_bound) {
  if (bound < 2) throw PreconditionError("bound must be >= 2");
  PrmZVerdict v;
  v.bound = bound;
  bool all_ok = true;

  for (std::uint64_t n = 1; n <= bound; ++n) {
    ++v.traces_checked;
    // trace Prm(Z) ∩ {nZ}^ = primary divisors of n
    std::vector<std::uint64_t> trace;
    for (std::uint64_t d : z_upset(n))
      if (d >= 2 && z_classify(ZIdeal{d}).primary) trace.push_back(d);
    if (trace.empty()) continue;  // vacuous (n = 1, or no primary divisor)

    // irreducibility inside Prm(Z): every pair of members needs a common
    // lower bound in the trace (an ideal contained in both)
    bool irreducible = true;
    for (std::size_t i = 0; i < trace.size() && irreducible; ++i)
      for (std::size_t j = i + 1; j < trace.size(); ++j) {
        bool found = false;
        for (std::uint64_t z : trace)
          if (z_contains(ZIdeal{trace[i]}, ZIdeal{z}) && z_contains(ZIdeal{trace[j]}, ZIdeal{z})) {
            found = true;
            break;
          }
        if (!found) {
          irreducible = false;
          break;
        }
      }
    if (!irreducible) continue;

    ++v.irreducible_traces;
    ZIdeal rad{trace[0]};
    for (std::uint64_t d : trace) rad = z_intersect(rad, ZIdeal{d});
    if (!z_classify(rad).primary) all_ok = false;  // Prm(Z) membership
    if (n <= explicit_bound) v.explicit_traces.push_back({n, rad.n});
  }
  v.all_irreducible_traces_ok = all_ok;

  // whole-space case (the trace of (0) is all of Prm(Z)): any two subbasic
  // opens meet (witness primes exist for every generator pair), and the
  // radical of (0) over Prm(Z) is (0) itself, which is primary
  bool whole_ok = true;
  std::uint64_t probe = std::min<std::uint64_t>(bound, 64);
  for (std::uint64_t a = 2; a <= probe; ++a)
    for (std::uint64_t b = a; b <= probe; ++b) {
      std::uint64_t p = reg_z_irreducibility_witness(a, b);
      if (a % p == 0 || b % p == 0 || !z_classify(ZIdeal{p}).primary) whole_ok = false;
    }
  v.whole_space_irreducible = whole_ok;
  v.whole_space_radical_primary = z_classify(ZIdeal{0}).primary;

  v.sober_bounded =
      v.all_irreducible_traces_ok && v.whole_space_irreducible && v.whole_space_radical_primary;
  return v;
}

nlohmann::json reg_z_certificate_to_json(const RegZCertificate& c) {
  nlohmann::json hist = nlohmann::json::object();
  for (auto [p, count] : c.witness_histogram) hist[std::to_string(p)] = count;
  return {{"schema_version", 1},
          {"space", "reg(Z)"},
          {"bound", c.bound},
          {"explicit_bound", c.explicit_bound},
          {"pairs_checked", c.pairs_checked},
          {"max_witness_prime", c.max_witness_prime},
          {"witness_histogram", hist},
          {"explicit_pairs", c.explicit_pairs},
          {"irreducible", c.irreducible},
          {"candidates_refuted", c.candidates_refuted},
          {"explicit_candidates", c.explicit_candidates},
          {"intersection_is_zero", c.intersection_is_zero},
          {"x_radical_outside_space", c.x_radical_outside_space},
          {"sober", c.sober}};
}

nlohmann::json prm_z_verdict_to_json(const PrmZVerdict& v) {
  return {{"schema_version", 1},
          {"space", "prm(Z)"},
          {"bound", v.bound},
          {"traces_checked", v.traces_checked},
          {"irreducible_traces", v.irreducible_traces},
          {"all_irreducible_traces_ok", v.all_irreducible_traces_ok},
          {"whole_space_irreducible", v.whole_space_irreducible},
          {"whole_space_radical_primary", v.whole_space_radical_primary},
          {"explicit_traces", v.explicit_traces},
          {"sober_bounded", v.sober_bounded}};
}

}  // namespace idealspaces
