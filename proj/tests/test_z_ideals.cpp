#include "idealspaces/z_ideals.hpp"

#include <numeric>
#include <random>

#include "doctest.h"
#include "idealspaces/ideal_lattice.hpp"

using namespace idealspaces;

TEST_CASE("z classification worked examples") {
  CHECK_FALSE(z_classify(ZIdeal{12}).primary);  // 12 = 2^2 * 3
  ZClassification eight = z_classify(ZIdeal{8});
  CHECK(eight.primary);
  CHECK_FALSE(eight.prime);
  ZClassification zero = z_classify(ZIdeal{0});
  CHECK(zero.prime);  // Z is a domain
  CHECK(zero.primary);
  CHECK(zero.radical);
  CHECK_FALSE(zero.maximal);
  CHECK_FALSE(zero.regular_proper);
  ZClassification unit = z_classify(ZIdeal{1});
  CHECK_FALSE(unit.prime);
  CHECK_FALSE(unit.primary);
  CHECK_FALSE(unit.regular_proper);
  CHECK(z_classify(ZIdeal{7}).maximal);
  CHECK(z_classify(ZIdeal{30}).radical);
  CHECK_FALSE(z_classify(ZIdeal{18}).radical);
}

TEST_CASE("z upset is the divisor list") {
  CHECK(z_upset(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(z_upset(1) == std::vector<std::uint64_t>{1});
  CHECK(z_upset(7) == std::vector<std::uint64_t>{1, 7});
  CHECK_THROWS_AS(z_upset(0), PreconditionError);
}

TEST_CASE("gcd/lcm/divisibility dualities, exhaustive to 10^4") {
  // sum = gcd, intersection = lcm, containment = reversed divisibility
  for (std::uint64_t a = 0; a <= 10000; ++a) {
    for (std::uint64_t b = a; b <= 10000; ++b) {
      std::uint64_t g = std::gcd(a, b);
      std::uint64_t l = (a == 0 || b == 0) ? 0 : a / g * b;
      if (z_sum(ZIdeal{a}, ZIdeal{b}).n != g) {
        REQUIRE(z_sum(ZIdeal{a}, ZIdeal{b}).n == g);
      }
      if (z_intersect(ZIdeal{a}, ZIdeal{b}).n != l) {
        REQUIRE(z_intersect(ZIdeal{a}, ZIdeal{b}).n == l);
      }
      // aZ inside bZ iff b | a; avoid the division when b = 0
      bool contained = (b == 0) ? (a == 0) : (a % b == 0);
      if (z_contains(ZIdeal{b}, ZIdeal{a}) != contained) {
        REQUIRE(z_contains(ZIdeal{b}, ZIdeal{a}) == contained);
      }
    }
  }
  CHECK(z_product(ZIdeal{6}, ZIdeal{10}).n == 60);
  CHECK(z_radical(ZIdeal{72}).n == 6);
  CHECK(z_radical(ZIdeal{0}).n == 0);
}

TEST_CASE("z ideal arithmetic matches the element-level oracle in Z/N") {
  for (std::uint64_t N : {36ull, 210ull, 240ull}) {
    FiniteRing r = build_ring(RingSpec::zmod(N));
    IdealLattice lat = enumerate_ideals(r);
    auto image = [&](std::uint64_t d) {
      return lat.index_of(principal_ideal(r, static_cast<Elem>(d % N)));
    };
    for (std::uint64_t a = 1; a <= N; ++a) {
      if (N % a) continue;
      for (std::uint64_t b = 1; b <= N; ++b) {
        if (N % b) continue;
        // sum and intersection of images match gcd and lcm images (the lcm
        // of two divisors of N again divides N)
        IdealId sum = lat.sum(image(a), image(b));
        IdealId meet = lat.meet(image(a), image(b));
        CHECK(sum == image(z_sum(ZIdeal{a}, ZIdeal{b}).n));
        CHECK(meet == image(z_intersect(ZIdeal{a}, ZIdeal{b}).n));
        CHECK(lat.leq(image(a), image(b)) == z_contains(ZIdeal{b}, ZIdeal{a}));
      }
    }
  }
}

TEST_CASE("bridge oracle: symbolic primary flag matches the finite-ring test") {
  for (std::uint64_t k = 2; k <= 64; ++k) {
    FiniteRing r = build_ring(RingSpec::zmod(k));
    IdealLattice lat = enumerate_ideals(r);
    IdealClassification cls = classify(lat);
    for (std::uint64_t n = 1; n <= k; ++n) {
      if (k % n) continue;
      IdealId img = lat.index_of(principal_ideal(r, static_cast<Elem>(n % k)));
      CHECK(static_cast<bool>(cls.primary[img]) == z_classify(ZIdeal{n}).primary);
      CHECK(static_cast<bool>(cls.prime[img]) == z_classify(ZIdeal{n}).prime);
      // n = 1 images to R, which equals its own radical while the symbolic
      // side treats the unit ideal as not radical
      CHECK(static_cast<bool>(cls.radical[img]) ==
            (n == 1 ? true : z_classify(ZIdeal{n}).radical));
    }
  }
}

TEST_CASE("irreducibility witnesses for Reg(Z)") {
  CHECK(reg_z_irreducibility_witness(6, 10) == 7);
  CHECK(reg_z_irreducibility_witness(2, 3) == 5);
  CHECK(reg_z_irreducibility_witness(2, 2) == 3);
  // never a divisor of n*m
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5000; ++t) {
    std::uint64_t n = 2 + rng() % 100000;
    std::uint64_t m = 2 + rng() % 100000;
    std::uint64_t p = reg_z_irreducibility_witness(n, m);
    CHECK(n % p != 0);
    CHECK(m % p != 0);
    CHECK((n * m) % p != 0);
  }
}

TEST_CASE("Reg(Z) certificate validates and concludes non-sober") {
  RegZCertificate cert = reg_z_not_sober_certificate(200);
  CHECK(cert.pairs_checked == 199 * 200 / 2);
  CHECK(cert.irreducible);
  CHECK(cert.intersection_is_zero);
  CHECK(cert.x_radical_outside_space);
  CHECK_FALSE(cert.sober);
  CHECK(cert.explicit_pairs.size() == 99 * 100 / 2);
  // candidate k = 6 gets witness p = 5 (least prime not dividing 6)
  bool found = false;
  for (const auto& c : cert.explicit_candidates)
    if (c[0] == 6) {
      CHECK(c[1] == 5);
      found = true;
    }
  CHECK(found);
  CHECK_THROWS_AS(reg_z_not_sober_certificate(1), PreconditionError);
  nlohmann::json j = reg_z_certificate_to_json(cert);
  CHECK(j.at("sober") == false);
  CHECK(j.dump() == reg_z_certificate_to_json(reg_z_not_sober_certificate(200)).dump());
}

TEST_CASE("Prm(Z) bounded soberness") {
  PrmZVerdict v = prm_z_sober_bounded(500);
  CHECK(v.sober_bounded);
  CHECK(v.traces_checked == 500);
  CHECK(v.all_irreducible_traces_ok);
  CHECK(v.whole_space_irreducible);
  CHECK(v.whole_space_radical_primary);
  // n = 12: trace {2,3,4} is not irreducible; n = 8: chain {2,4,8} with
  // X-radical 8
  bool saw8 = false, saw12 = false;
  for (const auto& t : v.explicit_traces) {
    if (t[0] == 8) {
      saw8 = true;
      CHECK(t[1] == 8);
    }
    if (t[0] == 12) saw12 = true;
  }
  CHECK(saw8);
  CHECK_FALSE(saw12);  // reducible traces are not recorded as irreducible
}

TEST_CASE("factorization guard") {
  CHECK_THROWS_AS(z_factor(2000003, 1000000), ResourceError);
  auto f = z_factor(720, 1000000);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<std::uint64_t, std::uint32_t>{2, 4});
  CHECK(f[1] == std::pair<std::uint64_t, std::uint32_t>{3, 2});
  CHECK(f[2] == std::pair<std::uint64_t, std::uint32_t>{5, 1});
}
