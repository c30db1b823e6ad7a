#include "idealspaces/ring.hpp"

#include <numeric>
#include <set>

#include "doctest.h"

using namespace idealspaces;

namespace {

// Independent polynomial arithmetic over F_p, used as an oracle against the
// PolyQuot kernel: school-book multiply then remainder by long division.
std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b,
                                        const std::vector<std::uint32_t>& f, std::uint32_t p) {
  std::vector<std::uint32_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  std::size_t d = f.size() - 1;
  for (std::size_t k = prod.size(); k-- > d;) {
    std::uint32_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < d; ++i)
      prod[k - d + i] = (prod[k - d + i] + (p - f[i] % p) % p * c) % p;
  }
  prod.resize(d);
  return prod;
}

}  // namespace

TEST_CASE("Zmod basics") {
  FiniteRing r = build_ring(RingSpec::zmod(4));
  CHECK(r.size() == 4);
  CHECK(r.mul(2, 2) == 0);
  CHECK(r.add(3, 3) == 2);
  CHECK(r.neg(1) == 3);
  CHECK(r.is_unit(3));
  CHECK_FALSE(r.is_unit(2));
}

TEST_CASE("Zmod unit scan matches gcd oracle") {
  for (std::uint64_t n : {6ull, 12ull, 30ull, 64ull}) {
    FiniteRing r = build_ring(RingSpec::zmod(n));
    for (Elem x = 0; x < n; ++x) {
      bool expected = std::gcd(std::uint64_t{x}, n) == 1;
      CHECK(r.is_unit(x) == expected);
    }
  }
}

TEST_CASE("regular element equals unit in finite rings, both scans independent") {
  for (const char* text : {"Z/6", "Z/12", "GF(2)[x]/(x^2)", "Z/2 x Z/2"}) {
    FiniteRing r = build_ring(parse_ring_spec(text));
    for (Elem x = 0; x < r.size(); ++x) {
      CHECK(r.is_unit(x) == r.is_regular_element(x));
    }
  }
  FiniteRing z6 = build_ring(RingSpec::zmod(6));
  CHECK_FALSE(z6.is_regular_element(2));  // 2*3 = 0
  CHECK(build_ring(RingSpec::zmod(5)).is_regular_element(3));
}

TEST_CASE("product ring componentwise arithmetic") {
  FiniteRing r = build_ring(parse_ring_spec("Z/2 x Z/2"));
  CHECK(r.size() == 4);
  // (1,0) has index 1, (0,1) has index 2 in mixed radix with the first
  // factor least significant
  CHECK(r.mul(1, 2) == r.zero());
  CHECK(r.add(1, 2) == r.one());
  CHECK(r.element_name(1) == "(1,0)");
}

TEST_CASE("PolyQuot kernel vs long-division oracle") {
  struct Case {
    std::uint32_t p;
    std::vector<std::uint32_t> f;
  };
  for (const auto& c : {Case{2, {0, 0, 1}},          // x^2
                        Case{2, {1, 1, 1}},          // x^2+x+1 (irreducible)
                        Case{3, {1, 0, 0, 1}},       // x^3+1
                        Case{5, {2, 3, 1}},          // x^2+3x+2
                        Case{2, {1, 0, 1, 0, 1}}}) {  // x^4+x^2+1
    FiniteRing r = build_ring(RingSpec::poly_quot(c.p, c.f));
    std::size_t d = c.f.size() - 1;
    auto decode = [&](Elem e) {
      std::vector<std::uint32_t> v(d);
      for (std::size_t i = 0; i < d; ++i) {
        v[i] = e % c.p;
        e /= c.p;
      }
      return v;
    };
    auto encode = [&](const std::vector<std::uint32_t>& v) {
      Elem e = 0;
      for (std::size_t i = d; i-- > 0;) e = e * c.p + v[i];
      return e;
    };
    for (Elem a = 0; a < r.size(); ++a)
      for (Elem b = 0; b < r.size(); ++b) {
        Elem expected = encode(poly_mul_mod(decode(a), decode(b), c.f, c.p));
        REQUIRE(r.mul(a, b) == expected);
      }
  }
}

TEST_CASE("PolyQuot x squares to zero in GF(2)[x]/(x^2)") {
  FiniteRing r = build_ring(parse_ring_spec("GF(2)[x]/(x^2)"));
  CHECK(r.size() == 4);
  Elem x = 2;  // coefficient vector (0,1)
  CHECK(r.mul(x, x) == r.zero());
  CHECK(r.element_name(x) == "x");
  CHECK(r.element_name(3) == "x+1");
}

TEST_CASE("spec validation rejects bad input") {
  CHECK_THROWS_AS(build_ring(RingSpec::zmod(1)), PreconditionError);
  CHECK_THROWS_AS(build_ring(RingSpec::poly_quot(4, {0, 1})), PreconditionError);
  CHECK_THROWS_AS(build_ring(RingSpec::poly_quot(2, {1, 0})), PreconditionError);  // not monic
  CHECK_THROWS_AS(build_ring(RingSpec::product({})), PreconditionError);
  CHECK_THROWS_AS(parse_ring_spec("Z/"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z/4 y Z/3"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("GF(6)[x]/(x^2)"), ParseError);
}

TEST_CASE("spec text grammar round trips") {
  for (const char* text : {"Z/4", "GF(2)[x]/(x^2)", "Z/4 x Z/3", "Z/8 / (4)",
                           "(Z/2 x Z/2) / (1)", "Z/2 x GF(3)[x]/(x^2+1)"}) {
    RingSpec spec = parse_ring_spec(text);
    std::string canon = ring_spec_to_text(spec);
    RingSpec again = parse_ring_spec(canon);
    CHECK(ring_spec_to_text(again) == canon);
    CHECK(ring_spec_to_json(again) == ring_spec_to_json(spec));
    RingSpec from_json = ring_spec_from_json(ring_spec_to_json(spec));
    CHECK(ring_spec_to_text(from_json) == canon);
  }
}

TEST_CASE("tuple generators map through mixed radix") {
  RingSpec spec = parse_ring_spec("(Z/2 x Z/2) / ((1,0))");
  FiniteRing r = build_ring(spec);
  CHECK(r.size() == 2);
}

TEST_CASE("quotient ring Z/4 by (2)") {
  FiniteRing r = build_ring(RingSpec::zmod(4));
  BitSet ideal(4);
  ideal.set(0);
  ideal.set(2);
  RingSurjection q = quotient_ring(r, ideal);
  CHECK(q.ring.size() == 2);
  CHECK(q.projection[0] == q.projection[2]);
  CHECK(q.projection[1] == q.projection[3]);
  CHECK(q.projection[0] != q.projection[1]);
}

TEST_CASE("quotient by zero ideal is an isomorphic copy") {
  FiniteRing r = build_ring(RingSpec::zmod(6));
  BitSet zero(6);
  zero.set(0);
  RingSurjection q = quotient_ring(r, zero);
  CHECK(q.ring.size() == 6);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      CHECK(q.projection[r.add(a, b)] == q.ring.add(q.projection[a], q.projection[b]));
      CHECK(q.projection[r.mul(a, b)] == q.ring.mul(q.projection[a], q.projection[b]));
    }
}

TEST_CASE("quotient of product by one factor") {
  FiniteRing r = build_ring(parse_ring_spec("Z/2 x Z/2"));
  BitSet ideal = ideal_closure(r, std::vector<Elem>{1});  // F2 x 0
  RingSurjection q = quotient_ring(r, ideal);
  CHECK(q.ring.size() == 2);
}

TEST_CASE("localization of Z/12 at (2)") {
  FiniteRing r = build_ring(RingSpec::zmod(12));
  BitSet m = ideal_closure(r, std::vector<Elem>{2});
  RingSurjection loc = localize_at_maximal(r, m);
  CHECK(loc.ring.size() == 4);
  // kernel is the set annihilated by an odd element: {0,4,8}
  CHECK(loc.projection[0] == loc.projection[4]);
  CHECK(loc.projection[4] == loc.projection[8]);
}

TEST_CASE("localization of a local ring is itself") {
  FiniteRing r = build_ring(RingSpec::zmod(4));
  BitSet m = ideal_closure(r, std::vector<Elem>{2});
  RingSurjection loc = localize_at_maximal(r, m);
  CHECK(loc.ring.size() == 4);
}

TEST_CASE("localization of Z/2 x Z/2 at a factor maximal ideal") {
  FiniteRing r = build_ring(parse_ring_spec("Z/2 x Z/2"));
  BitSet m = ideal_closure(r, std::vector<Elem>{1});
  RingSurjection loc = localize_at_maximal(r, m);
  CHECK(loc.ring.size() == 2);
}

TEST_CASE("localization of Z/n matches the prime-power oracle") {
  // localizing Z/n at (p) keeps exactly the p-part: a ring of size p^v
  // where p^v is the largest power of p dividing n
  for (std::uint64_t n = 2; n <= 64; ++n) {
    FiniteRing r = build_ring(RingSpec::zmod(n));
    for (std::uint64_t p = 2; p <= n; ++p) {
      if (n % p) continue;
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (!prime) continue;
      std::uint64_t pv = 1;
      std::uint64_t m = n;
      while (m % p == 0) {
        pv *= p;
        m /= p;
      }
      BitSet max_ideal = ideal_closure(r, std::vector<Elem>{static_cast<Elem>(p % n)});
      RingSurjection loc = localize_at_maximal(r, max_ideal);
      REQUIRE(loc.ring.size() == pv);
    }
  }
}

TEST_CASE("localize rejects non-maximal ideals") {
  FiniteRing r = build_ring(RingSpec::zmod(12));
  BitSet not_max = ideal_closure(r, std::vector<Elem>{4});
  CHECK_THROWS_AS(localize_at_maximal(r, not_max), PreconditionError);
}

TEST_CASE("ideal_closure produces ideals") {
  FiniteRing r = build_ring(RingSpec::zmod(12));
  BitSet i = ideal_closure(r, std::vector<Elem>{4, 6});
  std::set<std::uint32_t> expected{0, 2, 4, 6, 8, 10};  // gcd(4,6) = 2
  std::set<std::uint32_t> got;
  i.for_each([&](std::size_t e) { got.insert(static_cast<std::uint32_t>(e)); });
  CHECK(got == expected);
}
