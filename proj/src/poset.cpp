#include "idealspaces/poset.hpp"

#include <deque>
#include <random>
#include <unordered_set>

namespace idealspaces {

void FinitePoset::finish() {
  n = up.size();
  down.assign(n, BitSet(n));
  for (std::size_t i = 0; i < n; ++i)
    up[i].for_each([&](std::size_t j) { down[j].set(i); });
  covers_up.assign(n, BitSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    BitSet strict = up[i];
    strict.reset(i);
    strict.for_each([&](std::size_t j) {
      BitSet between = down[j] & strict;
      if (between.count() == 1) covers_up[i].set(j);
    });
  }
}

FinitePoset FinitePoset::from_trusted_up_rows(std::vector<BitSet> rows) {
  FinitePoset p;
  p.up = std::move(rows);
  p.finish();
  return p;
}

FinitePoset FinitePoset::from_up_rows(std::vector<BitSet> rows) {
  std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].universe_size() != n)
      throw PreconditionError("poset row universe mismatch");
    if (!rows[i].test(i)) throw PreconditionError("poset order not reflexive");
    bool ok = true;
    rows[i].for_each([&](std::size_t j) {
      if (j != i && rows[j].test(i)) ok = false;        // antisymmetry
      if (!rows[j].subset_of(rows[i])) ok = false;      // transitivity
    });
    if (!ok) throw PreconditionError("poset order not antisymmetric/transitive");
  }
  FinitePoset p;
  p.up = std::move(rows);
  p.finish();
  return p;
}

BitSet FinitePoset::maximal_elements() const {
  BitSet out(n);
  for (std::size_t i = 0; i < n; ++i)
    if (up[i].count() == 1) out.set(i);
  return out;
}

BitSet FinitePoset::minimal_elements() const {
  BitSet out(n);
  for (std::size_t i = 0; i < n; ++i)
    if (down[i].count() == 1) out.set(i);
  return out;
}

BitSet FinitePoset::minimal_within(const BitSet& subset) const {
  BitSet out(n);
  subset.for_each([&](std::size_t i) {
    BitSet below = down[i] & subset;
    if (below.count() == 1) out.set(i);
  });
  return out;
}

BitSet FinitePoset::maximal_within(const BitSet& subset) const {
  BitSet out(n);
  subset.for_each([&](std::size_t i) {
    BitSet above = up[i] & subset;
    if (above.count() == 1) out.set(i);
  });
  return out;
}

BitSet FinitePoset::up_closure(const BitSet& s) const {
  BitSet out(n);
  s.for_each([&](std::size_t i) { out |= up[i]; });
  return out;
}

bool FinitePoset::is_up_set(const BitSet& s) const {
  bool ok = true;
  s.for_each([&](std::size_t i) {
    if (!up[i].subset_of(s)) ok = false;
  });
  return ok;
}

std::vector<BitSet> FinitePoset::all_up_sets(std::size_t cap) const {
  // BFS from the empty up-set; a point may join once everything above it is
  // already in, so every up-set is reached along height-decreasing additions
  std::vector<BitSet> out;
  std::unordered_set<BitSet, BitSetHash> seen;
  std::deque<BitSet> work;
  BitSet empty(n);
  seen.insert(empty);
  out.push_back(empty);
  work.push_back(empty);
  while (!work.empty()) {
    BitSet u = work.front();
    work.pop_front();
    for (std::size_t x = 0; x < n; ++x) {
      if (u.test(x)) continue;
      BitSet strictly_above = up[x];
      strictly_above.reset(x);
      if (!strictly_above.subset_of(u)) continue;
      BitSet v = u;
      v.set(x);
      if (seen.insert(v).second) {
        out.push_back(v);
        if (out.size() > cap)
          throw ResourceError("closed-set enumeration exceeds closed_set_cap (" +
                              std::to_string(cap) + ")");
        work.push_back(v);
      }
    }
  }
  return out;
}

std::size_t FinitePoset::count_up_sets_up_to(std::size_t cap) const {
  try {
    return all_up_sets(cap).size();
  } catch (const ResourceError&) {
    return BitSet::npos;
  }
}

namespace {

// chains_from[i] = number of cover paths from i up to a maximal element,
// saturating at limit
std::vector<std::uint64_t> chains_from_counts(const FinitePoset& p, std::uint64_t limit) {
  std::vector<std::uint64_t> cnt(p.n, 0);
  // process points from top to bottom: order by descending up-set size
  std::vector<std::uint32_t> order(p.n);
  for (std::uint32_t i = 0; i < p.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return p.up[a].count() < p.up[b].count();
  });
  for (std::uint32_t i : order) {
    if (p.covers_up[i].empty()) {
      cnt[i] = 1;
      continue;
    }
    std::uint64_t total = 0;
    p.covers_up[i].for_each([&](std::size_t j) {
      total += cnt[j];
      if (total > limit) total = limit + 1;
    });
    cnt[i] = total;
  }
  return cnt;
}

}  // namespace

std::uint64_t FinitePoset::count_maximal_chains(std::uint64_t limit) const {
  auto cnt = chains_from_counts(*this, limit);
  std::uint64_t total = 0;
  minimal_elements().for_each([&](std::size_t i) {
    total += cnt[i];
    if (total > limit) total = limit + 1;
  });
  return total;
}

std::vector<std::vector<std::uint32_t>> FinitePoset::all_maximal_chains(std::uint64_t cap) const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> path;
  auto dfs = [&](auto&& self, std::uint32_t v) -> void {
    path.push_back(v);
    if (covers_up[v].empty()) {
      out.push_back(path);
      if (out.size() > cap)
        throw ResourceError("maximal-chain enumeration exceeds chain_enumeration_cap (" +
                            std::to_string(cap) + ")");
    } else {
      covers_up[v].for_each([&](std::size_t j) { self(self, static_cast<std::uint32_t>(j)); });
    }
    path.pop_back();
  };
  minimal_elements().for_each([&](std::size_t i) { dfs(dfs, static_cast<std::uint32_t>(i)); });
  return out;
}

std::vector<std::vector<std::uint32_t>> FinitePoset::sample_maximal_chains(
    std::size_t k, std::uint64_t seed) const {
  auto cnt = chains_from_counts(*this, std::uint64_t{1} << 62);
  std::vector<std::uint32_t> minimals = minimal_elements().members();
  std::vector<std::vector<std::uint32_t>> out;
  if (minimals.empty()) return out;
  std::mt19937_64 rng(seed);
  auto weighted_pick = [&](const std::vector<std::uint32_t>& cands) {
    std::uint64_t total = 0;
    for (auto c : cands) total += cnt[c];
    std::uint64_t t = total ? rng() % total : 0;
    for (auto c : cands) {
      if (t < cnt[c]) return c;
      t -= cnt[c];
    }
    return cands.back();
  };
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<std::uint32_t> chain;
    std::uint32_t v = weighted_pick(minimals);
    chain.push_back(v);
    while (!covers_up[v].empty()) {
      v = weighted_pick(covers_up[v].members());
      chain.push_back(v);
    }
    out.push_back(std::move(chain));
  }
  return out;
}

}  // namespace idealspaces
