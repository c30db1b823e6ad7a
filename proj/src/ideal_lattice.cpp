#include "idealspaces/ideal_lattice.hpp"

#include <algorithm>
#include <deque>

namespace idealspaces {

BitSet principal_ideal(const FiniteRing& r, Elem x) {
  std::size_t n = r.size();
  BitSet out(n);
  if (const Elem* row = r.mul_row(x)) {
    for (std::size_t b = 0; b < n; ++b) out.set(row[b]);
  } else {
    for (std::size_t b = 0; b < n; ++b) out.set(r.mul(x, static_cast<Elem>(b)));
  }
  return out;
}

BitSet ideal_from_generators(const FiniteRing& r, std::span<const Elem> gens) {
  BitSet out(r.size());
  out.set(r.zero());
  for (Elem g : gens) out = ideal_sum_sets(r, out, principal_ideal(r, g));
  return out;
}

BitSet ideal_sum_sets(const FiniteRing& r, const BitSet& i, const BitSet& j) {
  if (j.subset_of(i)) return i;
  if (i.subset_of(j)) return j;
  // I+J is the union of the cosets a+I for a in J; `out` stays a union of
  // I-cosets throughout, so members of J already in `out` contribute nothing.
  BitSet out = i;
  std::vector<std::uint32_t> imembers = i.members();
  j.for_each([&](std::size_t a) {
    if (out.test(a)) return;
    if (const Elem* row = r.add_row(static_cast<Elem>(a))) {
      for (std::uint32_t m : imembers) out.set(row[m]);
    } else {
      for (std::uint32_t m : imembers) out.set(r.add(static_cast<Elem>(a), m));
    }
  });
  return out;
}

namespace {

/// Additive closure of a set that is already closed under ring
/// multiplication; the result is an ideal.
BitSet additive_closure(const FiniteRing& r, BitSet set) {
  std::vector<Elem> members;
  set.for_each([&](std::size_t m) { members.push_back(static_cast<Elem>(m)); });
  std::deque<Elem> queue(members.begin(), members.end());
  while (!queue.empty()) {
    Elem a = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < members.size(); ++k) {
      Elem s = r.add(a, members[k]);
      if (!set.test(s)) {
        set.set(s);
        members.push_back(s);
        queue.push_back(s);
      }
    }
  }
  return set;
}

}  // namespace

BitSet ideal_product_sets(const FiniteRing& r, const BitSet& i, const BitSet& j) {
  std::size_t n = r.size();
  BitSet gens(n);
  gens.set(r.zero());
  i.for_each([&](std::size_t a) {
    if (const Elem* row = r.mul_row(static_cast<Elem>(a))) {
      j.for_each([&](std::size_t b) { gens.set(row[b]); });
    } else {
      j.for_each([&](std::size_t b) { gens.set(r.mul(static_cast<Elem>(a), static_cast<Elem>(b))); });
    }
  });
  // r*(a*b) = a*(r*b) keeps the generator set absorbing, so the additive
  // closure is already the product ideal.
  return additive_closure(r, gens);
}

BitSet radical_of_set(const FiniteRing& r, const BitSet& i) {
  std::size_t n = r.size();
  BitSet out(n);
  for (std::size_t x = 0; x < n; ++x) {
    Elem cur = static_cast<Elem>(x);
    for (std::size_t k = 0; k < n; ++k) {  // powers cycle within n steps
      if (i.test(cur)) {
        out.set(x);
        break;
      }
      Elem next = r.mul(cur, static_cast<Elem>(x));
      if (next == cur) break;
      cur = next;
    }
  }
  return out;
}

namespace {

BitSet element_power_set(const FiniteRing& r, Elem x) {
  BitSet powers(r.size());
  Elem cur = x;
  while (!powers.test(cur)) {
    powers.set(cur);
    cur = r.mul(cur, x);
  }
  return powers;
}

}  // namespace

IdealId IdealLattice::sum(IdealId i, IdealId j) const {
  BitSet common = up[i] & up[j];
  // indices ascend with cardinality, so the minimum of the common up-set is
  // the join (the sum ideal is contained in every common upper bound)
  return static_cast<IdealId>(common.min_element());
}

IdealId IdealLattice::meet(IdealId i, IdealId j) const {
  BitSet common = down[i] & down[j];
  return static_cast<IdealId>(common.max_element());
}

IdealId IdealLattice::index_of(const BitSet& set) const {
  auto it = index_of_set.find(set);
  if (it == index_of_set.end())
    throw PreconditionError("set is not an ideal of the lattice of " + ring.spec_text());
  return it->second;
}

std::string IdealLattice::ideal_name(IdealId i) const {
  if (i == top) return "(1)";
  const auto& gens = min_gens[i];
  if (gens.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) out += ",";
    out += ring.element_name(gens[k]);
  }
  return out + ")";
}

IdealLattice enumerate_ideals(const FiniteRing& r, const Caps& caps) {
  std::size_t n = r.size();
  IdealLattice lat;
  lat.ring = r;

  std::unordered_map<BitSet, IdealId, BitSetHash> seen;
  std::vector<BitSet> found;
  std::vector<IdealId> principal_ids;
  auto add = [&](const BitSet& s) -> bool {
    auto [it, inserted] = seen.emplace(s, static_cast<IdealId>(found.size()));
    if (inserted) {
      found.push_back(s);
      if (found.size() > caps.ideal_cap)
        throw ResourceError("ideal count exceeds ideal_cap (" + std::to_string(caps.ideal_cap) +
                            ") for " + r.spec_text());
    }
    return inserted;
  };

  for (std::size_t x = 0; x < n; ++x) {
    BitSet p = principal_ideal(r, static_cast<Elem>(x));
    add(p);
  }
  std::vector<BitSet> principal_sets(found);

  // close under binary sums with principal ideals; every ideal of a finite
  // ring is a finite sum of principal ideals, so this reaches all of them
  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < found.size(); ++i) work.push_back(i);
  while (!work.empty()) {
    std::size_t i = work.front();
    work.pop_front();
    BitSet base = found[i];
    for (const BitSet& p : principal_sets) {
      BitSet s = ideal_sum_sets(r, base, p);
      if (add(s)) work.push_back(found.size() - 1);
    }
  }

  std::sort(found.begin(), found.end(), BitSet::canonical_less);
  lat.ideals = std::move(found);
  for (IdealId i = 0; i < lat.ideals.size(); ++i) lat.index_of_set[lat.ideals[i]] = i;
  std::size_t m = lat.ideals.size();
  lat.bottom = 0;
  lat.top = static_cast<IdealId>(m - 1);

  lat.up.assign(m, BitSet(m));
  lat.down.assign(m, BitSet(m));
  for (IdealId i = 0; i < m; ++i)
    for (IdealId j = 0; j < m; ++j)
      if (lat.ideals[i].subset_of(lat.ideals[j])) {
        lat.up[i].set(j);
        lat.down[j].set(i);
      }

  // upper covers: minimal elements of the strict up-set
  lat.covers.assign(m, BitSet(m));
  for (IdealId i = 0; i < m; ++i) {
    BitSet strict = lat.up[i];
    strict.reset(i);
    strict.for_each([&](std::size_t j) {
      BitSet below = lat.down[j] & strict;
      if (below.count() == 1) lat.covers[i].set(j);
    });
  }

  lat.min_gens.resize(m);
  for (IdealId i = 0; i < m; ++i) lat.min_gens[i] = minimal_generators(r, lat.ideals[i]);

  lat.element_powers.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    lat.element_powers.push_back(element_power_set(r, static_cast<Elem>(x)));

  return lat;
}

std::vector<Elem> minimal_generators(const FiniteRing& r, const BitSet& ideal) {
  std::vector<Elem> gens;
  BitSet covered(r.size());
  covered.set(r.zero());
  while (covered != ideal) {
    BitSet rest = ideal;
    rest.subtract(covered);
    Elem g = static_cast<Elem>(rest.min_element());
    gens.push_back(g);
    covered = ideal_sum_sets(r, covered, principal_ideal(r, g));
  }
  return gens;
}

bool IdealClassification::flag(const std::string& name, IdealId i) const {
  if (name == "prime") return prime[i];
  if (name == "maximal") return maximal[i];
  if (name == "primary") return primary[i];
  if (name == "radical") return radical[i];
  if (name == "irreducible") return irreducible[i];
  if (name == "strongly_irreducible") return strongly_irreducible[i];
  if (name == "completely_irreducible") return completely_irreducible[i];
  if (name == "nilpotent") return nilpotent[i];
  if (name == "nil") return nil[i];
  if (name == "principal") return principal[i];
  if (name == "regular") return regular[i];
  if (name == "minimal") return minimal[i];
  if (name == "minimal_prime") return minimal_prime[i];
  if (name == "proper") return proper[i];
  if (name == "finitely_generated") return finitely_generated[i];
  throw PreconditionError("unknown classification flag: " + name);
}

IdealClassification classify(const IdealLattice& lat) {
  const FiniteRing& r = lat.ring;
  std::size_t n = r.size();
  std::size_t m = lat.count();
  IdealClassification c;
  for (auto* v : {&c.prime, &c.maximal, &c.primary, &c.radical, &c.irreducible,
                  &c.strongly_irreducible, &c.completely_irreducible, &c.nilpotent, &c.nil,
                  &c.principal, &c.regular, &c.minimal, &c.minimal_prime, &c.proper,
                  &c.finitely_generated})
    v->assign(m, 0);
  c.radical_index.resize(m);

  BitSet principal_set(m);
  for (std::size_t x = 0; x < n; ++x)
    principal_set.set(lat.index_of(principal_ideal(r, static_cast<Elem>(x))));

  BitSet regular_elements(n);
  for (std::size_t x = 0; x < n; ++x)
    if (r.is_regular_element(static_cast<Elem>(x))) regular_elements.set(x);

  for (IdealId i = 0; i < m; ++i) {
    const BitSet& I = lat.ideals[i];
    bool proper = i != lat.top;
    c.proper[i] = proper;
    c.finitely_generated[i] = 1;  // every ideal of a finite ring
    c.principal[i] = principal_set.test(i);
    c.maximal[i] = proper && lat.up[i].count() == 2;
    c.minimal[i] = i != lat.bottom && lat.down[i].count() == 2;

    // radical via precomputed element power sets
    BitSet rad(n);
    for (std::size_t x = 0; x < n; ++x)
      if (lat.element_powers[x].intersects(I)) rad.set(x);
    c.radical_index[i] = lat.index_of(rad);
    c.radical[i] = c.radical_index[i] == i;

    // prime: proper and ab in I => a in I or b in I
    if (proper) {
      bool prime = true;
      for (std::size_t a = 0; a < n && prime; ++a) {
        if (I.test(a)) continue;
        const Elem* row = r.mul_row(static_cast<Elem>(a));
        for (std::size_t b = a; b < n; ++b) {
          if (I.test(b)) continue;
          Elem ab = row ? row[b] : r.mul(static_cast<Elem>(a), static_cast<Elem>(b));
          if (I.test(ab)) {
            prime = false;
            break;
          }
        }
      }
      c.prime[i] = prime;
    }

    // primary: proper and ab in I => a in I or b in sqrt(I)
    if (proper) {
      const BitSet& sqrt_i = lat.ideals[c.radical_index[i]];
      bool primary = true;
      for (std::size_t a = 0; a < n && primary; ++a) {
        if (I.test(a)) continue;
        const Elem* row = r.mul_row(static_cast<Elem>(a));
        for (std::size_t b = 0; b < n; ++b) {
          if (sqrt_i.test(b)) continue;
          Elem ab = row ? row[b] : r.mul(static_cast<Elem>(a), static_cast<Elem>(b));
          if (I.test(ab)) {
            primary = false;
            break;
          }
        }
      }
      c.primary[i] = primary;
    }

    // irreducible: proper with a unique upper cover. Two distinct covers
    // meet in I, and with one cover every pair of strict supersets meets
    // strictly above I.
    c.irreducible[i] = proper && lat.covers[i].count() == 1;

    // strongly irreducible: no pair outside the down-set meets into it.
    // It suffices to test the minimal elements of the complement.
    if (proper) {
      BitSet not_below = BitSet::full(m);
      not_below.subtract(lat.down[i]);
      std::vector<IdealId> mins;
      not_below.for_each([&](std::size_t j) {
        BitSet below = lat.down[j] & not_below;
        if (below.count() == 1) mins.push_back(static_cast<IdealId>(j));
      });
      bool strong = true;
      for (std::size_t a = 0; a < mins.size() && strong; ++a)
        for (std::size_t b = a; b < mins.size(); ++b) {
          if (lat.down[i].test(lat.meet(mins[a], mins[b]))) {
            strong = false;
            break;
          }
        }
      c.strongly_irreducible[i] = strong;
    }

    // completely irreducible: I differs from the meet of its strict up-set.
    // This is the finite-lattice form of "every family intersecting to I
    // contains I": members of such a family all contain I, so a family
    // avoiding I sits inside the strict up-set and its intersection
    // contains the strict up-set's meet; conversely the strict up-set
    // itself is a family intersecting to I whenever the meet collapses.
    if (proper) {
      BitSet inter = BitSet::full(n);
      BitSet strict = lat.up[i];
      strict.reset(i);
      strict.for_each([&](std::size_t j) { inter &= lat.ideals[j]; });
      c.completely_irreducible[i] = !(inter == I);
    }

    // nil: every member has 0 among its powers
    bool nil = true;
    I.for_each([&](std::size_t x) {
      if (!lat.element_powers[x].test(r.zero())) nil = false;
    });
    c.nil[i] = nil;

    // nilpotent: iterated ideal product reaches (0); powers descend, so
    // stabilization means failure
    {
      BitSet zero_ideal(n);
      zero_ideal.set(r.zero());
      BitSet power = I;
      bool nilpotent = false;
      for (std::size_t k = 0; k < I.count() + 1; ++k) {
        if (power == zero_ideal) {
          nilpotent = true;
          break;
        }
        BitSet next = ideal_product_sets(r, power, I);
        if (next == power) break;
        power = next;
      }
      c.nilpotent[i] = nilpotent;
    }

    // regular: proper and contains a regular element
    if (proper) c.regular[i] = I.intersects(regular_elements);
  }

  for (IdealId i = 0; i < m; ++i) {
    if (!c.prime[i]) continue;
    bool minimal = true;
    BitSet strictly_below = lat.down[i];
    strictly_below.reset(i);
    strictly_below.for_each([&](std::size_t j) {
      if (c.prime[j]) minimal = false;
    });
    c.minimal_prime[i] = minimal;
  }

  return c;
}

int krull_dimension(const IdealLattice& lat, const IdealClassification& cls) {
  std::size_t m = lat.count();
  std::vector<int> height(m, -1);
  int best = 0;
  // ideal indices ascend with cardinality, so scanning in order is a valid
  // topological order of the containment DAG
  for (IdealId i = 0; i < m; ++i) {
    if (!cls.prime[i]) continue;
    int h = 0;
    BitSet below = lat.down[i];
    below.reset(i);
    below.for_each([&](std::size_t j) {
      if (cls.prime[j] && height[j] + 1 > h) h = height[j] + 1;
    });
    height[i] = h;
    best = std::max(best, h);
  }
  return best;
}

IdealId ideal_product(const IdealLattice& lat, IdealId i, IdealId j) {
  return lat.index_of(ideal_product_sets(lat.ring, lat.ideals[i], lat.ideals[j]));
}

IdealId radical_of(const IdealLattice& lat, IdealId i) {
  return lat.index_of(radical_of_set(lat.ring, lat.ideals[i]));
}

nlohmann::json lattice_to_json(const IdealLattice& lat, const IdealClassification& cls) {
  nlohmann::json ideals = nlohmann::json::array();
  for (IdealId i = 0; i < lat.count(); ++i) {
    nlohmann::json flags;
    for (const char* f : {"prime", "maximal", "primary", "radical", "irreducible",
                          "strongly_irreducible", "completely_irreducible", "nilpotent", "nil",
                          "principal", "regular", "minimal", "minimal_prime", "proper",
                          "finitely_generated"})
      flags[f] = static_cast<bool>(cls.flag(f, i));
    ideals.push_back({{"index", i},
                      {"name", lat.ideal_name(i)},
                      {"members", lat.ideals[i].members()},
                      {"generators", lat.min_gens[i]},
                      {"radical", cls.radical_index[i]},
                      {"flags", flags}});
  }
  nlohmann::json containment = nlohmann::json::array();
  for (IdealId i = 0; i < lat.count(); ++i) {
    BitSet strict = lat.up[i];
    strict.reset(i);
    strict.for_each([&](std::size_t j) {
      containment.push_back({i, static_cast<IdealId>(j)});
    });
  }
  return {{"ring", ring_spec_to_json(lat.ring.spec())},
          {"ring_text", lat.ring.spec_text()},
          {"ideal_count", lat.count()},
          {"ideals", ideals},
          {"containment", containment}};
}

}  // namespace idealspaces
