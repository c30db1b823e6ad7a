#include "idealspaces/poset.hpp"

#include "doctest.h"

using namespace idealspaces;

namespace {

// Poset from strict covering pairs (i < j), transitively closed.
FinitePoset poset_from_relations(std::size_t n,
                                 std::initializer_list<std::pair<int, int>> less) {
  std::vector<BitSet> rows(n, BitSet(n));
  for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
  for (auto [a, b] : less) rows[a].set(b);
  for (bool changed = true; changed;) {  // transitive closure
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      BitSet next = rows[i];
      rows[i].for_each([&](std::size_t j) { next |= rows[j]; });
      if (!(next == rows[i])) {
        rows[i] = next;
        changed = true;
      }
    }
  }
  return FinitePoset::from_up_rows(std::move(rows));
}

}  // namespace

TEST_CASE("poset validation rejects non-orders") {
  std::vector<BitSet> rows(2, BitSet(2));
  rows[0].set(0);
  rows[1].set(1);
  rows[0].set(1);
  rows[1].set(0);  // 0 <= 1 and 1 <= 0
  CHECK_THROWS_AS(FinitePoset::from_up_rows(rows), PreconditionError);

  std::vector<BitSet> missing(1, BitSet(1));  // not reflexive
  CHECK_THROWS_AS(FinitePoset::from_up_rows(missing), PreconditionError);
}

TEST_CASE("up-sets of a chain and an antichain") {
  FinitePoset chain = poset_from_relations(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(chain.all_up_sets(100).size() == 5);  // suffixes plus the empty set

  FinitePoset anti = poset_from_relations(4, {});
  CHECK(anti.all_up_sets(100).size() == 16);  // every subset is an up-set
  CHECK_THROWS_AS(anti.all_up_sets(7), ResourceError);
}

TEST_CASE("closure and up-set predicates") {
  FinitePoset v = poset_from_relations(3, {{2, 0}, {2, 1}});  // c below a, b
  BitSet just_c(3);
  just_c.set(2);
  CHECK(v.up_closure(just_c) == BitSet::full(3));
  BitSet ab(3);
  ab.set(0);
  ab.set(1);
  CHECK(v.is_up_set(ab));
  CHECK_FALSE(v.is_up_set(just_c));
  CHECK(v.maximal_elements() == ab);
  CHECK(v.minimal_elements() == just_c);
}

TEST_CASE("maximal chains of the diamond") {
  FinitePoset diamond = poset_from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(diamond.count_maximal_chains(100) == 2);
  auto chains = diamond.all_maximal_chains(100);
  REQUIRE(chains.size() == 2);
  for (const auto& c : chains) {
    CHECK(c.size() == 3);
    CHECK(c.front() == 0);
    CHECK(c.back() == 3);
  }
  auto sampled = diamond.sample_maximal_chains(5, 99);
  CHECK(sampled.size() == 5);
  for (const auto& c : sampled) CHECK(c.size() == 3);
}

TEST_CASE("grid poset chain count") {
  // 3x3 divisor grid: paths from bottom to top = C(4,2) = 6
  std::vector<BitSet> rows(9, BitSet(9));
  auto id = [](int i, int j) { return 3 * i + j; };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = i; a < 3; ++a)
        for (int b = j; b < 3; ++b) rows[id(i, j)].set(id(a, b));
  FinitePoset grid = FinitePoset::from_up_rows(rows);
  CHECK(grid.count_maximal_chains(1000) == 6);
  CHECK(grid.all_maximal_chains(1000).size() == 6);
}
