#include "idealspaces/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <random>

namespace idealspaces {

namespace {

constexpr std::size_t kEagerTableLimit = 1024;
constexpr std::size_t kLazyTableLimit = 4096;
constexpr std::size_t kExhaustiveAxiomLimit = 256;
constexpr std::size_t kDerivedExhaustiveAxiomLimit = 64;
constexpr int kSampledAxiomTriples = 10000;
constexpr int kDerivedSampledAxiomTriples = 2000;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Caps Caps::from_env() {
  Caps c;
  auto read = [](const char* name, auto& field) {
    if (const char* v = std::getenv(name)) {
      char* end = nullptr;
      unsigned long long val = std::strtoull(v, &end, 10);
      if (end && *end == '\0' && val > 0) field = static_cast<std::decay_t<decltype(field)>>(val);
    }
  };
  read("IDEALSPACES_RING_SIZE_CAP", c.ring_size_cap);
  read("IDEALSPACES_IDEAL_CAP", c.ideal_cap);
  read("IDEALSPACES_CLOSED_SET_CAP", c.closed_set_cap);
  read("IDEALSPACES_CHAIN_ENUMERATION_CAP", c.chain_enumeration_cap);
  read("IDEALSPACES_Z_FACTOR_LIMIT", c.z_factor_limit);
  return c;
}

// ---------------------------------------------------------------------------
// Kernels
// ---------------------------------------------------------------------------

struct FiniteRing::Kernel {
  virtual ~Kernel() = default;
  virtual std::size_t size() const = 0;
  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;
  virtual Elem add_impl(Elem a, Elem b) const = 0;
  virtual Elem mul_impl(Elem a, Elem b) const = 0;
  virtual Elem neg_impl(Elem a) const = 0;
  virtual std::string name(Elem a) const = 0;

  // Row-memoized operation tables. Rows are published through atomic
  // pointers so concurrent readers never observe a half-built row.
  struct LazyTable {
    std::vector<std::atomic<const Elem*>> rows;
    std::vector<std::unique_ptr<Elem[]>> storage;
    mutable std::mutex mu;
  };

  void init_cache() const {
    std::size_t n = size();
    if (n > kLazyTableLimit) return;
    add_table_.rows = std::vector<std::atomic<const Elem*>>(n);
    mul_table_.rows = std::vector<std::atomic<const Elem*>>(n);
    add_table_.storage.resize(n);
    mul_table_.storage.resize(n);
    neg_table_.resize(n);
    for (std::size_t a = 0; a < n; ++a) neg_table_[a] = neg_impl(static_cast<Elem>(a));
    have_cache_ = true;
    if (n <= kEagerTableLimit) {
      for (std::size_t a = 0; a < n; ++a) {
        fill_row(add_table_, static_cast<Elem>(a), &Kernel::add_impl);
        fill_row(mul_table_, static_cast<Elem>(a), &Kernel::mul_impl);
      }
    }
  }

  Elem add(Elem a, Elem b) const { return have_cache_ ? add_row(a)[b] : add_impl(a, b); }
  Elem mul(Elem a, Elem b) const { return have_cache_ ? mul_row(a)[b] : mul_impl(a, b); }
  Elem neg(Elem a) const { return have_cache_ ? neg_table_[a] : neg_impl(a); }

  const Elem* add_row(Elem a) const {
    const Elem* row = add_table_.rows[a].load(std::memory_order_acquire);
    return row ? row : fill_row(add_table_, a, &Kernel::add_impl);
  }
  const Elem* mul_row(Elem a) const {
    const Elem* row = mul_table_.rows[a].load(std::memory_order_acquire);
    return row ? row : fill_row(mul_table_, a, &Kernel::mul_impl);
  }
  bool has_cache() const { return have_cache_; }

 private:
  using OpImpl = Elem (Kernel::*)(Elem, Elem) const;

  const Elem* fill_row(LazyTable& t, Elem a, OpImpl op) const {
    std::lock_guard<std::mutex> g(t.mu);
    const Elem* existing = t.rows[a].load(std::memory_order_relaxed);
    if (existing) return existing;
    std::size_t n = size();
    auto row = std::make_unique<Elem[]>(n);
    for (std::size_t b = 0; b < n; ++b) row[b] = (this->*op)(a, static_cast<Elem>(b));
    const Elem* ptr = row.get();
    t.storage[a] = std::move(row);
    t.rows[a].store(ptr, std::memory_order_release);
    return ptr;
  }

  mutable LazyTable add_table_, mul_table_;
  mutable std::vector<Elem> neg_table_;
  mutable bool have_cache_ = false;
};

namespace {

struct ZmodKernel final : FiniteRing::Kernel {
  std::uint64_t n;
  explicit ZmodKernel(std::uint64_t n) : n(n) {}
  std::size_t size() const override { return n; }
  Elem zero() const override { return 0; }
  Elem one() const override { return 1; }
  Elem add_impl(Elem a, Elem b) const override {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= n ? s - n : s);
  }
  Elem mul_impl(Elem a, Elem b) const override {
    return static_cast<Elem>((std::uint64_t{a} * b) % n);
  }
  Elem neg_impl(Elem a) const override { return a == 0 ? 0 : static_cast<Elem>(n - a); }
  std::string name(Elem a) const override { return std::to_string(a); }
};

struct PolyKernel final : FiniteRing::Kernel {
  std::uint64_t p;
  std::size_t deg;
  std::vector<std::uint32_t> f;                 // c0..cd, monic
  std::vector<std::vector<std::uint32_t>> red;  // red[k] = x^(deg+k) mod f
  std::size_t n;

  PolyKernel(std::uint64_t p, std::vector<std::uint32_t> coeffs) : p(p), f(std::move(coeffs)) {
    deg = f.size() - 1;
    n = 1;
    for (std::size_t i = 0; i < deg; ++i) n *= static_cast<std::size_t>(p);
    // x^deg = -(c0 + c1 x + ... + c_{deg-1} x^{deg-1}); x^(deg+k) by shifting.
    std::vector<std::uint32_t> cur(deg);
    for (std::size_t i = 0; i < deg; ++i)
      cur[i] = static_cast<std::uint32_t>((p - f[i] % p) % p);
    red.push_back(cur);
    for (std::size_t k = 1; deg >= 2 && k <= deg - 2; ++k) {
      std::vector<std::uint32_t> next(deg, 0);
      std::uint32_t top = cur[deg - 1];
      for (std::size_t i = deg - 1; i > 0; --i) next[i] = cur[i - 1];
      for (std::size_t i = 0; i < deg; ++i)
        next[i] = static_cast<std::uint32_t>((next[i] + std::uint64_t{top} * red[0][i]) % p);
      red.push_back(next);
      cur = next;
    }
  }

  void decode(Elem a, std::uint32_t* out) const {
    std::uint64_t v = a;
    for (std::size_t i = 0; i < deg; ++i) {
      out[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
  }
  Elem encode(const std::uint32_t* c) const {
    std::uint64_t v = 0;
    for (std::size_t i = deg; i-- > 0;) v = v * p + c[i];
    return static_cast<Elem>(v);
  }

  std::size_t size() const override { return n; }
  Elem zero() const override { return 0; }
  Elem one() const override { return 1; }
  Elem add_impl(Elem a, Elem b) const override {
    std::uint32_t ca[64], cb[64];
    decode(a, ca);
    decode(b, cb);
    for (std::size_t i = 0; i < deg; ++i) ca[i] = (ca[i] + cb[i]) % static_cast<std::uint32_t>(p);
    return encode(ca);
  }
  Elem mul_impl(Elem a, Elem b) const override {
    std::uint32_t ca[64], cb[64];
    std::uint64_t prod[128] = {0};
    decode(a, ca);
    decode(b, cb);
    for (std::size_t i = 0; i < deg; ++i) {
      if (!ca[i]) continue;
      for (std::size_t j = 0; j < deg; ++j) prod[i + j] += std::uint64_t{ca[i]} * cb[j];
    }
    std::uint32_t out[64];
    for (std::size_t i = 0; i < deg; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p);
    if (deg >= 2) {
      for (std::size_t k = deg; k <= 2 * deg - 2; ++k) {
        std::uint64_t c = prod[k] % p;
        if (!c) continue;
        const auto& r = red[k - deg];
        for (std::size_t i = 0; i < deg; ++i)
          out[i] = static_cast<std::uint32_t>((out[i] + c * r[i]) % p);
      }
    }
    return encode(out);
  }
  Elem neg_impl(Elem a) const override {
    std::uint32_t ca[64];
    decode(a, ca);
    for (std::size_t i = 0; i < deg; ++i)
      ca[i] = static_cast<std::uint32_t>((p - ca[i]) % p);
    return encode(ca);
  }
  std::string name(Elem a) const override {
    std::uint32_t ca[64];
    decode(a, ca);
    std::string s;
    for (std::size_t i = deg; i-- > 0;) {
      if (!ca[i]) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || ca[i] != 1) s += std::to_string(ca[i]);
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }
};

struct ProductKernel final : FiniteRing::Kernel {
  std::vector<FiniteRing> factors;
  std::vector<std::size_t> stride;
  std::size_t n = 1;
  Elem zero_ = 0, one_ = 0;

  explicit ProductKernel(std::vector<FiniteRing> fs) : factors(std::move(fs)) {
    stride.resize(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k) {
      stride[k] = n;
      n *= factors[k].size();
    }
    std::uint64_t z = 0, o = 0;
    for (std::size_t k = factors.size(); k-- > 0;) {
      z = z * factors[k].size() + factors[k].zero();
      o = o * factors[k].size() + factors[k].one();
    }
    zero_ = static_cast<Elem>(z);
    one_ = static_cast<Elem>(o);
  }

  std::size_t size() const override { return n; }
  Elem zero() const override { return zero_; }
  Elem one() const override { return one_; }

  Elem add_impl(Elem a, Elem b) const override {
    std::uint64_t out = 0, va = a, vb = b;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      std::size_t s = factors[k].size();
      out += std::uint64_t{factors[k].add(static_cast<Elem>(va % s), static_cast<Elem>(vb % s))} *
             stride[k];
      va /= s;
      vb /= s;
    }
    return static_cast<Elem>(out);
  }
  Elem mul_impl(Elem a, Elem b) const override {
    std::uint64_t out = 0, va = a, vb = b;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      std::size_t s = factors[k].size();
      out += std::uint64_t{factors[k].mul(static_cast<Elem>(va % s), static_cast<Elem>(vb % s))} *
             stride[k];
      va /= s;
      vb /= s;
    }
    return static_cast<Elem>(out);
  }
  Elem neg_impl(Elem a) const override {
    std::uint64_t out = 0, va = a;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      std::size_t s = factors[k].size();
      out += std::uint64_t{factors[k].neg(static_cast<Elem>(va % s))} * stride[k];
      va /= s;
    }
    return static_cast<Elem>(out);
  }
  std::string name(Elem a) const override {
    std::string s = "(";
    std::uint64_t va = a;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      std::size_t sz = factors[k].size();
      if (k) s += ",";
      s += factors[k].element_name(static_cast<Elem>(va % sz));
      va /= sz;
    }
    return s + ")";
  }
};

struct QuotientKernel final : FiniteRing::Kernel {
  FiniteRing base;
  std::vector<Elem> reps;      // ascending minimal coset representatives
  std::vector<Elem> coset_of;  // base element -> quotient index

  QuotientKernel(FiniteRing b, const BitSet& ideal) : base(std::move(b)) {
    std::size_t n = base.size();
    coset_of.assign(n, static_cast<Elem>(-1));
    std::vector<Elem> ideal_members;
    ideal.for_each([&](std::size_t i) { ideal_members.push_back(static_cast<Elem>(i)); });
    for (std::size_t x = 0; x < n; ++x) {
      if (coset_of[x] != static_cast<Elem>(-1)) continue;
      Elem idx = static_cast<Elem>(reps.size());
      reps.push_back(static_cast<Elem>(x));
      for (Elem i : ideal_members) coset_of[base.add(static_cast<Elem>(x), i)] = idx;
    }
  }

  std::size_t size() const override { return reps.size(); }
  Elem zero() const override { return coset_of[base.zero()]; }
  Elem one() const override { return coset_of[base.one()]; }
  Elem add_impl(Elem a, Elem b) const override { return coset_of[base.add(reps[a], reps[b])]; }
  Elem mul_impl(Elem a, Elem b) const override { return coset_of[base.mul(reps[a], reps[b])]; }
  Elem neg_impl(Elem a) const override { return coset_of[base.neg(reps[a])]; }
  std::string name(Elem a) const override { return "[" + base.element_name(reps[a]) + "]"; }
};

}  // namespace

// ---------------------------------------------------------------------------
// FiniteRing surface
// ---------------------------------------------------------------------------

Elem FiniteRing::add(Elem a, Elem b) const { return kernel_->add(a, b); }
Elem FiniteRing::mul(Elem a, Elem b) const { return kernel_->mul(a, b); }
Elem FiniteRing::neg(Elem a) const { return kernel_->neg(a); }

bool FiniteRing::is_unit(Elem x, Elem* inverse) const {
  if (kernel_->has_cache()) {
    const Elem* row = kernel_->mul_row(x);
    for (std::size_t y = 0; y < size_; ++y) {
      if (row[y] == one_) {
        if (inverse) *inverse = static_cast<Elem>(y);
        return true;
      }
    }
    return false;
  }
  for (std::size_t y = 0; y < size_; ++y) {
    if (mul(x, static_cast<Elem>(y)) == one_) {
      if (inverse) *inverse = static_cast<Elem>(y);
      return true;
    }
  }
  return false;
}

bool FiniteRing::is_regular_element(Elem x, Elem* annihilated) const {
  if (kernel_->has_cache()) {
    const Elem* row = kernel_->mul_row(x);
    for (std::size_t y = 0; y < size_; ++y) {
      if (y != zero_ && row[y] == zero_) {
        if (annihilated) *annihilated = static_cast<Elem>(y);
        return false;
      }
    }
    return true;
  }
  for (std::size_t y = 0; y < size_; ++y) {
    if (y != zero_ && mul(x, static_cast<Elem>(y)) == zero_) {
      if (annihilated) *annihilated = static_cast<Elem>(y);
      return false;
    }
  }
  return true;
}

const Elem* FiniteRing::add_row(Elem a) const {
  return kernel_->has_cache() ? kernel_->add_row(a) : nullptr;
}
const Elem* FiniteRing::mul_row(Elem a) const {
  return kernel_->has_cache() ? kernel_->mul_row(a) : nullptr;
}

std::string FiniteRing::spec_text() const { return ring_spec_to_text(*spec_); }
std::string FiniteRing::element_name(Elem x) const { return kernel_->name(x); }

// ---------------------------------------------------------------------------
// Construction and verification
// ---------------------------------------------------------------------------

struct RingBuilder {
  static FiniteRing make(std::shared_ptr<const FiniteRing::Kernel> kernel,
                         std::shared_ptr<const RingSpec> spec) {
    kernel->init_cache();
    FiniteRing r;
    r.size_ = kernel->size();
    r.zero_ = kernel->zero();
    r.one_ = kernel->one();
    r.kernel_ = std::move(kernel);
    r.spec_ = std::move(spec);
    return r;
  }
};

namespace {

std::size_t spec_size(const RingSpec& spec, const Caps& caps) {
  struct V {
    const Caps& caps;
    std::size_t operator()(const ZmodSpec& s) const { return check(s.n); }
    std::size_t operator()(const PolyQuotSpec& s) const {
      std::size_t n = 1;
      for (std::size_t i = 0; i + 1 < s.coeffs.size(); ++i) n = check(n * s.p);
      return n;
    }
    std::size_t operator()(const ProductSpec& s) const {
      std::size_t n = 1;
      for (const auto& f : s.factors) n = check(n * std::visit(*this, f.ast));
      return n;
    }
    std::size_t operator()(const QuotientSpec& s) const { return std::visit(*this, s.base->ast); }
    std::size_t check(std::size_t n) const {
      if (n > caps.ring_size_cap)
        throw ResourceError("realized ring size exceeds ring_size_cap (" +
                            std::to_string(caps.ring_size_cap) + ")");
      return n;
    }
  };
  return std::visit(V{caps}, spec.ast);
}

void validate_spec(const RingSpec& spec) {
  struct V {
    void operator()(const ZmodSpec& s) const {
      if (s.n < 2) throw PreconditionError("Z/n requires n >= 2, got n = " + std::to_string(s.n));
    }
    void operator()(const PolyQuotSpec& s) const {
      if (!is_prime_u64(s.p))
        throw PreconditionError("GF(p) requires prime p, got p = " + std::to_string(s.p));
      if (s.coeffs.size() < 2)
        throw PreconditionError("polynomial modulus must have degree >= 1");
      if (s.coeffs.size() > 64)
        throw PreconditionError("polynomial modulus degree too large");
      for (auto c : s.coeffs)
        if (c >= s.p)
          throw PreconditionError("polynomial coefficient " + std::to_string(c) +
                                  " not reduced mod " + std::to_string(s.p));
      if (s.coeffs.back() != 1)
        throw PreconditionError("polynomial modulus must be monic");
    }
    void operator()(const ProductSpec& s) const {
      if (s.factors.empty()) throw PreconditionError("product requires at least one factor");
      for (const auto& f : s.factors) std::visit(*this, f.ast);
    }
    void operator()(const QuotientSpec& s) const { std::visit(*this, s.base->ast); }
  };
  std::visit(V{}, spec.ast);
}

/// Ring axiom check: exhaustive triples for small rings, deterministic
/// samples above. Unary identities are always checked for every element.
void verify_ring_axioms(const FiniteRing& r, std::size_t exhaustive_limit, int samples) {
  std::size_t n = r.size();
  Elem zero = r.zero(), one = r.one();
  auto fail = [&](const char* what) {
    throw Error(std::string("ring axiom violated: ") + what + " in " + r.spec_text());
  };
  if (zero == one) fail("0 = 1");
  for (std::size_t a = 0; a < n; ++a) {
    Elem ea = static_cast<Elem>(a);
    if (r.add(ea, zero) != ea) fail("a+0 != a");
    if (r.mul(ea, one) != ea) fail("a*1 != a");
    if (r.add(ea, r.neg(ea)) != zero) fail("a+(-a) != 0");
  }
  auto check_triple = [&](Elem a, Elem b, Elem c) {
    if (r.add(a, b) != r.add(b, a)) fail("a+b != b+a");
    if (r.mul(a, b) != r.mul(b, a)) fail("a*b != b*a");
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) fail("addition not associative");
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) fail("multiplication not associative");
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) fail("distributivity");
  };
  if (n <= exhaustive_limit) {
    for (std::size_t a = 0; a < n; ++a) {
      const Elem* add_a = r.add_row(static_cast<Elem>(a));
      const Elem* mul_a = r.mul_row(static_cast<Elem>(a));
      for (std::size_t b = 0; b < n; ++b) {
        Elem ab_add = add_a[b], ab_mul = mul_a[b];
        if (ab_add != r.add(static_cast<Elem>(b), static_cast<Elem>(a))) fail("a+b != b+a");
        if (ab_mul != r.mul(static_cast<Elem>(b), static_cast<Elem>(a))) fail("a*b != b*a");
        const Elem* add_ab = r.add_row(ab_add);
        const Elem* mul_ab = r.mul_row(ab_mul);
        const Elem* add_b = r.add_row(static_cast<Elem>(b));
        const Elem* mul_b = r.mul_row(static_cast<Elem>(b));
        for (std::size_t c = 0; c < n; ++c) {
          if (add_ab[c] != add_a[add_b[c]]) fail("addition not associative");
          if (mul_ab[c] != mul_a[mul_b[c]]) fail("multiplication not associative");
          if (mul_a[add_b[c]] != r.add(mul_a[b], mul_a[c])) fail("distributivity");
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x1dea15bace5ull);
    auto pick = [&] { return static_cast<Elem>(rng() % n); };
    check_triple(zero, one, static_cast<Elem>(n - 1));
    for (int i = 0; i < samples; ++i) check_triple(pick(), pick(), pick());
  }
}

FiniteRing build_ring_impl(const RingSpec& spec, const Caps& caps);

std::shared_ptr<const FiniteRing::Kernel> build_kernel(const RingSpec& spec, const Caps& caps) {
  struct V {
    const Caps& caps;
    std::shared_ptr<const FiniteRing::Kernel> operator()(const ZmodSpec& s) const {
      return std::make_shared<ZmodKernel>(s.n);
    }
    std::shared_ptr<const FiniteRing::Kernel> operator()(const PolyQuotSpec& s) const {
      return std::make_shared<PolyKernel>(s.p, s.coeffs);
    }
    std::shared_ptr<const FiniteRing::Kernel> operator()(const ProductSpec& s) const {
      std::vector<FiniteRing> factors;
      factors.reserve(s.factors.size());
      for (const auto& f : s.factors) factors.push_back(build_ring_impl(f, caps));
      return std::make_shared<ProductKernel>(std::move(factors));
    }
    std::shared_ptr<const FiniteRing::Kernel> operator()(const QuotientSpec& s) const {
      FiniteRing base = build_ring_impl(*s.base, caps);
      for (Elem g : s.gens)
        if (g >= base.size())
          throw PreconditionError("quotient generator index " + std::to_string(g) +
                                  " out of range for ring of size " + std::to_string(base.size()));
      BitSet ideal = ideal_closure(base, s.gens);
      return std::make_shared<QuotientKernel>(std::move(base), ideal);
    }
  };
  return std::visit(V{caps}, spec.ast);
}

FiniteRing build_ring_impl(const RingSpec& spec, const Caps& caps) {
  return RingBuilder::make(build_kernel(spec, caps), std::make_shared<RingSpec>(spec));
}

}  // namespace

FiniteRing build_ring(const RingSpec& spec, const Caps& caps) {
  validate_spec(spec);
  spec_size(spec, caps);
  FiniteRing r = build_ring_impl(spec, caps);
  verify_ring_axioms(r, kExhaustiveAxiomLimit, kSampledAxiomTriples);
  return r;
}

BitSet ideal_closure(const FiniteRing& r, std::span<const Elem> gens) {
  std::size_t n = r.size();
  BitSet set(n);
  set.set(r.zero());
  // all ring multiples of the generators, then close under addition
  std::vector<Elem> members{r.zero()};
  for (Elem g : gens) {
    for (std::size_t x = 0; x < n; ++x) {
      Elem m = r.mul(static_cast<Elem>(x), g);
      if (!set.test(m)) {
        set.set(m);
        members.push_back(m);
      }
    }
  }
  std::deque<Elem> queue(members.begin(), members.end());
  while (!queue.empty()) {
    Elem a = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < members.size(); ++i) {
      Elem s = r.add(a, members[i]);
      if (!set.test(s)) {
        set.set(s);
        members.push_back(s);
        queue.push_back(s);
      }
    }
  }
  return set;
}

BitSet project_set(const BitSet& s, const std::vector<Elem>& projection, std::size_t target_size) {
  BitSet out(target_size);
  s.for_each([&](std::size_t x) { out.set(projection[x]); });
  return out;
}

namespace {

bool is_ideal_set(const FiniteRing& r, const BitSet& s) {
  if (s.universe_size() != r.size() || !s.test(r.zero())) return false;
  std::vector<Elem> members;
  s.for_each([&](std::size_t i) { members.push_back(static_cast<Elem>(i)); });
  for (Elem a : members)
    for (Elem b : members)
      if (!s.test(r.add(a, b))) return false;
  for (std::size_t x = 0; x < r.size(); ++x)
    for (Elem a : members)
      if (!s.test(r.mul(static_cast<Elem>(x), a))) return false;
  return true;
}

std::vector<Elem> greedy_generators(const FiniteRing& r, const BitSet& ideal) {
  std::vector<Elem> gens;
  BitSet covered = ideal_closure(r, gens);
  while (covered != ideal) {
    BitSet rest = ideal;
    rest.subtract(covered);
    gens.push_back(static_cast<Elem>(rest.min_element()));
    covered = ideal_closure(r, gens);
  }
  return gens;
}

RingSurjection quotient_impl(const FiniteRing& r, const BitSet& ideal) {
  auto kernel = std::make_shared<QuotientKernel>(r, ideal);
  auto spec = std::make_shared<RingSpec>(
      RingSpec::quotient(r.spec(), greedy_generators(r, ideal)));
  std::vector<Elem> projection = kernel->coset_of;
  FiniteRing q = RingBuilder::make(std::move(kernel), std::move(spec));
  verify_ring_axioms(q, kDerivedExhaustiveAxiomLimit, kDerivedSampledAxiomTriples);
  return {std::move(q), std::move(projection)};
}

}  // namespace

RingSurjection quotient_ring(const FiniteRing& r, const BitSet& ideal) {
  if (!is_ideal_set(r, ideal))
    throw PreconditionError("quotient_ring: the given set is not an ideal of " + r.spec_text());
  return quotient_impl(r, ideal);
}

RingSurjection localize_at_maximal(const FiniteRing& r, const BitSet& m) {
  if (!is_ideal_set(r, m))
    throw PreconditionError("localize_at_maximal: not an ideal of " + r.spec_text());
  if (m.count() == r.size())
    throw PreconditionError("localize_at_maximal: ideal is not proper");
  // maximality <=> R/m is a field
  RingSurjection probe = quotient_impl(r, m);
  const FiniteRing& q = probe.ring;
  for (std::size_t x = 0; x < q.size(); ++x)
    if (x != q.zero() && !q.is_unit(static_cast<Elem>(x)))
      throw PreconditionError("localize_at_maximal: ideal is not maximal in " + r.spec_text());
  // kernel of the localization map: elements killed by some s outside m
  std::size_t n = r.size();
  BitSet kernel_set(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t s = 0; s < n; ++s) {
      if (m.test(s)) continue;
      if (r.mul(static_cast<Elem>(s), static_cast<Elem>(x)) == r.zero()) {
        kernel_set.set(x);
        break;
      }
    }
  }
  return quotient_impl(r, kernel_set);
}

// ---------------------------------------------------------------------------
// Text grammar
// ---------------------------------------------------------------------------

namespace {

struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit SpecParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  std::uint64_t parse_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected integer", pos);
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (std::uint64_t{1} << 40)) throw ParseError("integer too large", pos);
      ++pos;
    }
    return v;
  }

  RingSpec parse_spec() {
    RingSpec left = parse_product();
    while (peek_is('/')) {
      ++pos;
      expect('(');
      std::vector<Elem> gens = parse_gens(left);
      expect(')');
      left = RingSpec::quotient(std::move(left), std::move(gens));
    }
    return left;
  }

  RingSpec parse_product() {
    std::vector<RingSpec> factors;
    factors.push_back(parse_atom());
    skip_ws();
    while (pos < s.size()) {
      if (s[pos] == 'x') {
        ++pos;
      } else if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xc3 &&
                 static_cast<unsigned char>(s[pos + 1]) == 0x97) {  // UTF-8 'multiplication sign'
        pos += 2;
      } else {
        break;
      }
      factors.push_back(parse_atom());
      skip_ws();
    }
    if (factors.size() == 1) return std::move(factors[0]);
    return RingSpec::product(std::move(factors));
  }

  RingSpec parse_atom() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
    if (s[pos] == '(') {
      ++pos;
      RingSpec inner = parse_spec();
      expect(')');
      return inner;
    }
    if (s.compare(pos, 2, "Z/") == 0) {
      pos += 2;
      return RingSpec::zmod(parse_uint());
    }
    if (s.compare(pos, 2, "GF") == 0) {
      pos += 2;
      expect('(');
      std::uint64_t p = parse_uint();
      expect(')');
      expect('[');
      skip_ws();
      if (pos >= s.size() || s[pos] != 'x') throw ParseError("expected 'x'", pos);
      ++pos;
      expect(']');
      expect('/');
      expect('(');
      std::vector<std::uint32_t> coeff = parse_poly(p);
      expect(')');
      return RingSpec::poly_quot(p, std::move(coeff));
    }
    throw ParseError("expected ring atom (Z/n, GF(p)[x]/(f) or parenthesized spec)", pos);
  }

  std::vector<std::uint32_t> parse_poly(std::uint64_t p) {
    if (!is_prime_u64(p)) throw ParseError("GF(p) requires prime p", pos);
    std::map<std::size_t, std::int64_t> terms;
    int sign = 1;
    if (peek_is('-')) {
      ++pos;
      sign = -1;
    }
    while (true) {
      skip_ws();
      std::int64_t coef = 1;
      bool saw_coef = false;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coef = static_cast<std::int64_t>(parse_uint());
        saw_coef = true;
      }
      std::size_t exp = 0;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
      }
      if (pos < s.size() && s[pos] == 'x') {
        ++pos;
        exp = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          exp = static_cast<std::size_t>(parse_uint());
          if (exp > 63) throw ParseError("polynomial degree too large", pos);
        }
      } else if (!saw_coef) {
        throw ParseError("expected polynomial term", pos);
      }
      terms[exp] += sign * coef;
      skip_ws();
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else {
        break;
      }
    }
    std::size_t deg = 0;
    for (auto& [e, c] : terms) {
      c = ((c % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
          static_cast<std::int64_t>(p);
      if (c != 0) deg = std::max(deg, e);
    }
    if (deg == 0) throw ParseError("polynomial modulus must have degree >= 1", pos);
    std::vector<std::uint32_t> coeffs(deg + 1, 0);
    for (auto& [e, c] : terms)
      if (e <= deg) coeffs[e] = static_cast<std::uint32_t>(c);
    if (coeffs.back() != 1) throw ParseError("polynomial modulus must be monic", pos);
    return coeffs;
  }

  std::vector<Elem> parse_gens(const RingSpec& base) {
    std::vector<Elem> gens;
    if (peek_is(')')) return gens;  // empty list -> zero ideal
    while (true) {
      skip_ws();
      if (peek_is('(')) {
        ++pos;
        std::vector<std::uint64_t> tuple;
        tuple.push_back(parse_uint());
        while (peek_is(',')) {
          ++pos;
          tuple.push_back(parse_uint());
        }
        expect(')');
        gens.push_back(tuple_to_index(base, tuple));
      } else {
        gens.push_back(static_cast<Elem>(parse_uint()));
      }
      if (peek_is(',')) {
        ++pos;
        continue;
      }
      break;
    }
    return gens;
  }

  Elem tuple_to_index(const RingSpec& base, const std::vector<std::uint64_t>& tuple) {
    const auto* prod = std::get_if<ProductSpec>(&base.ast);
    if (!prod) throw ParseError("tuple generator requires a product base ring", pos);
    if (prod->factors.size() != tuple.size())
      throw ParseError("tuple arity does not match product arity", pos);
    Caps caps;
    std::uint64_t idx = 0;
    for (std::size_t k = prod->factors.size(); k-- > 0;) {
      std::size_t sz = spec_size(prod->factors[k], caps);
      if (tuple[k] >= sz) throw ParseError("tuple component out of range", pos);
      idx = idx * sz + tuple[k];
    }
    return static_cast<Elem>(idx);
  }
};

std::string poly_to_text(const PolyQuotSpec& s) {
  std::string out;
  for (std::size_t i = s.coeffs.size(); i-- > 0;) {
    std::uint32_t c = s.coeffs[i];
    if (!c) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

RingSpec parse_ring_spec(const std::string& text) {
  SpecParser parser(text);
  RingSpec spec = parser.parse_spec();
  parser.skip_ws();
  if (parser.pos != text.size()) throw ParseError("trailing input", parser.pos);
  validate_spec(spec);
  return spec;
}

std::string ring_spec_to_text(const RingSpec& spec) {
  struct V {
    std::string operator()(const ZmodSpec& s) const { return "Z/" + std::to_string(s.n); }
    std::string operator()(const PolyQuotSpec& s) const {
      return "GF(" + std::to_string(s.p) + ")[x]/(" + poly_to_text(s) + ")";
    }
    std::string operator()(const ProductSpec& s) const {
      std::string out;
      for (std::size_t i = 0; i < s.factors.size(); ++i) {
        if (i) out += " x ";
        out += wrapped(s.factors[i]);
      }
      return out;
    }
    std::string operator()(const QuotientSpec& s) const {
      std::string out = wrapped(*s.base);
      out += " / (";
      for (std::size_t i = 0; i < s.gens.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s.gens[i]);
      }
      return out + ")";
    }
    std::string wrapped(const RingSpec& f) const {
      std::string t = std::visit(*this, f.ast);
      if (std::holds_alternative<ProductSpec>(f.ast) || std::holds_alternative<QuotientSpec>(f.ast))
        return "(" + t + ")";
      return t;
    }
  };
  return std::visit(V{}, spec.ast);
}

nlohmann::json ring_spec_to_json(const RingSpec& spec) {
  struct V {
    nlohmann::json operator()(const ZmodSpec& s) const {
      return {{"kind", "zmod"}, {"n", s.n}};
    }
    nlohmann::json operator()(const PolyQuotSpec& s) const {
      return {{"kind", "polyquot"}, {"p", s.p}, {"coeffs", s.coeffs}};
    }
    nlohmann::json operator()(const ProductSpec& s) const {
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& f : s.factors) factors.push_back(std::visit(*this, f.ast));
      return {{"kind", "product"}, {"factors", factors}};
    }
    nlohmann::json operator()(const QuotientSpec& s) const {
      return {{"kind", "quotient"},
              {"base", std::visit(*this, s.base->ast)},
              {"gens", s.gens}};
    }
  };
  return std::visit(V{}, spec.ast);
}

RingSpec ring_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("ring spec JSON must be an object with a `kind` field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zmod") return RingSpec::zmod(j.at("n").get<std::uint64_t>());
  if (kind == "polyquot")
    return RingSpec::poly_quot(j.at("p").get<std::uint64_t>(),
                               j.at("coeffs").get<std::vector<std::uint32_t>>());
  if (kind == "product") {
    std::vector<RingSpec> factors;
    for (const auto& f : j.at("factors")) factors.push_back(ring_spec_from_json(f));
    return RingSpec::product(std::move(factors));
  }
  if (kind == "quotient")
    return RingSpec::quotient(ring_spec_from_json(j.at("base")),
                              j.at("gens").get<std::vector<Elem>>());
  throw ParseError("unknown ring spec kind: " + kind);
}

}  // namespace idealspaces
