#include "plab/ring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "group_util.hpp"
#include "plab/scalars.hpp"

namespace plab {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string var_name(std::uint32_t i, std::uint32_t vars) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (vars <= 4) return names[i];
  return "x" + std::to_string(i + 1);
}

void check_cap(std::uint64_t size, const RingOptions& opt, const std::string& what) {
  if (size > opt.ring_cap)
    throw CapExceeded(what + " has " + std::to_string(size) + " elements, ring cap is " +
                      std::to_string(opt.ring_cap));
}

}  // namespace

// ---------------------------------------------------------------------------
// RingSpec

RingSpec RingSpec::zn(std::uint32_t n) {
  RingSpec s;
  s.kind = RingKind::zn;
  s.n = n;
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  RingSpec s;
  s.kind = RingKind::product;
  s.factors = std::move(factors);
  return s;
}

RingSpec RingSpec::trunc_poly(std::uint32_t p, std::uint32_t vars) {
  RingSpec s;
  s.kind = RingKind::trunc_poly;
  s.p = p;
  s.vars = vars;
  return s;
}

RingSpec RingSpec::localization(RingSpec base, std::vector<Elem> mult_set_generators) {
  RingSpec s;
  s.kind = RingKind::localization;
  s.base = std::make_shared<const RingSpec>(std::move(base));
  s.mult_set_generators = std::move(mult_set_generators);
  return s;
}

std::string RingSpec::describe() const {
  switch (kind) {
    case RingKind::zn:
      return "Z" + std::to_string(n);
    case RingKind::product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "x";
        const bool wrap = factors[i].kind == RingKind::product;
        out += wrap ? "(" + factors[i].describe() + ")" : factors[i].describe();
      }
      return out;
    }
    case RingKind::trunc_poly: {
      std::string v;
      for (std::uint32_t i = 0; i < vars; ++i) v += (i ? "," : "") + var_name(i, vars);
      return "Z" + std::to_string(p) + "[" + v + "]/(" + v + ")^2";
    }
    case RingKind::localization: {
      std::string g;
      for (std::size_t i = 0; i < mult_set_generators.size(); ++i)
        g += (i ? "," : "") + std::to_string(mult_set_generators[i]);
      return "S^-1(" + (base ? base->describe() : std::string("?")) + ")<" + g + ">";
    }
  }
  return "?";
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RingKind::zn:
      return a.n == b.n;
    case RingKind::product:
      return a.factors == b.factors;
    case RingKind::trunc_poly:
      return a.p == b.p && a.vars == b.vars;
    case RingKind::localization:
      if (!a.base || !b.base) return a.base == b.base && a.mult_set_generators == b.mult_set_generators;
      return *a.base == *b.base && a.mult_set_generators == b.mult_set_generators;
  }
  return false;
}

// ---------------------------------------------------------------------------
// FiniteRing

bool Ideal::is_proper() const { return ring == nullptr || members.count() < ring->size(); }

FiniteRing::FiniteRing(Tables t, RingSpec spec, RingOptions options, std::vector<RingPtr> components)
    : size_(t.size),
      add_(std::move(t.add)),
      mul_(std::move(t.mul)),
      zero_(t.zero),
      one_(t.one),
      labels_(std::move(t.labels)),
      spec_(std::move(spec)),
      options_(options),
      components_(std::move(components)) {
  if (size_ < 2) throw SpecError("the zero ring is not allowed");
  if (add_.size() != size_ * size_ || mul_.size() != size_ * size_)
    throw SpecError("operation tables have the wrong shape");
  if (labels_.size() != size_) {
    labels_.resize(size_);
    for (std::size_t i = 0; i < size_; ++i) labels_[i] = std::to_string(i);
  }
  neg_.assign(size_, 0);
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b)
      if (add(a, b) == zero_) {
        neg_[a] = b;
        break;
      }
  scan_axioms();
  derive_units();
  derive_additive_generators();
  derive_maximal_ideals();
}

void FiniteRing::scan_axioms() const {
  const std::size_t n = size_;
  auto fail = [&](const std::string& what) {
    throw AxiomError(spec_.describe() + ": ring axiom failed: " + what);
  };
  if (zero_ >= n || one_ >= n || zero_ == one_) fail("bad identities");
  for (Elem a = 0; a < n; ++a) {
    if (add(a, zero_) != a) fail("additive identity");
    if (mul(a, one_) != a) fail("multiplicative identity");
    if (add(a, neg_[a]) != zero_) fail("additive inverse");
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) >= n || mul(a, b) >= n) fail("table entry out of range");
      if (add(a, b) != add(b, a)) fail("additive commutativity");
      if (mul(a, b) != mul(b, a)) fail("multiplicative commutativity");
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_sum = add(a, b);
      const Elem ab_mul = mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (add(ab_sum, c) != add(a, add(b, c))) fail("additive associativity");
        if (mul(ab_mul, c) != mul(a, mul(b, c))) fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(ab_mul, mul(a, c))) fail("distributivity");
      }
    }
}

void FiniteRing::derive_units() {
  units_ = ElementSet(size_);
  for (Elem a = 0; a < size_; ++a) {
    for (Elem b = 0; b < size_; ++b)
      if (mul(a, b) == one_) {
        units_.set(a);
        break;
      }
    if (!units_.test(a)) nonunits_.push_back(a);
  }
}

void FiniteRing::derive_additive_generators() {
  ElementSet h(size_);
  h.set(zero_);
  for (Elem a = 0; a < size_; ++a) {
    if (h.test(a)) continue;
    add_gens_.push_back(a);
    detail::join_cyclic(add_, size_, h, a);
  }
}

void FiniteRing::derive_maximal_ideals() {
  // A finite commutative ring is a product of local rings; its maximal ideals
  // are m_e = {x : ex is a nonunit of eR} for the primitive idempotents e.
  std::vector<Elem> idem;
  for (Elem e = 0; e < size_; ++e)
    if (e != zero_ && mul(e, e) == e) idem.push_back(e);
  for (Elem e : idem) {
    bool primitive = true;
    for (Elem f : idem)
      if (f != e && mul(f, e) == f) {
        primitive = false;
        break;
      }
    if (!primitive) continue;
    ElementSet m(size_);
    for (Elem x = 0; x < size_; ++x) {
      const Elem ex = mul(e, x);
      bool unit = false;
      for (Elem y = 0; y < size_ && !unit; ++y) unit = mul(ex, y) == e;
      if (!unit) m.set(x);
    }
    maximal_.push_back(ideal_from_members(*this, std::move(m)));
  }
  std::sort(maximal_.begin(), maximal_.end(),
            [](const Ideal& a, const Ideal& b) { return canonical_less(a.members, b.members); });
}

Elem FiniteRing::compose(std::span<const Elem> parts) const {
  if (parts.size() != components_.size()) throw SpecError("compose: wrong number of components");
  Elem idx = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] >= components_[i]->size()) throw SpecError("compose: component out of range");
    idx = static_cast<Elem>(idx * components_[i]->size() + parts[i]);
  }
  return idx;
}

std::vector<Elem> FiniteRing::decompose(Elem a) const {
  std::vector<Elem> parts(components_.size());
  for (std::size_t i = components_.size(); i-- > 0;) {
    const auto s = static_cast<Elem>(components_[i]->size());
    parts[i] = a % s;
    a /= s;
  }
  return parts;
}

ElementSet FiniteRing::principal(Elem a) const {
  ElementSet s(size_);
  for (Elem r = 0; r < size_; ++r) s.set(mul(r, a));
  return s;
}

const std::vector<Ideal>& FiniteRing::ideals() const {
  std::call_once(ideals_once_, [this] {
    // Close the principal ideals under joins, breadth first from zero.
    std::vector<std::pair<ElementSet, Elem>> principals;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen_principal;
    for (Elem a = 0; a < size_; ++a) {
      auto p = principal(a);
      if (seen_principal.emplace(p, principals.size()).second) principals.emplace_back(std::move(p), a);
    }
    std::vector<Ideal> found;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
    Ideal zero{this, ElementSet(size_), {}};
    zero.members.set(zero_);
    index.emplace(zero.members, 0);
    found.push_back(std::move(zero));
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (const auto& [p, g] : principals) {
        if (p.is_subset_of(found[i].members)) continue;
        ElementSet joined = found[i].members;
        detail::join_subgroup(add_, size_, joined, p);
        if (index.contains(joined)) continue;
        if (found.size() >= options_.ideal_cap) {
          ideals_error_ = spec_.describe() + ": ideal lattice exceeds cap " + std::to_string(options_.ideal_cap);
          return;
        }
        auto gens = found[i].generators;
        gens.push_back(g);
        index.emplace(joined, found.size());
        found.push_back(Ideal{this, std::move(joined), std::move(gens)});
      }
    }
    std::sort(found.begin(), found.end(),
              [](const Ideal& a, const Ideal& b) { return canonical_less(a.members, b.members); });
    ideals_ = std::move(found);
  });
  if (!ideals_error_.empty()) throw CapExceeded(ideals_error_);
  return ideals_;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

RingPtr build_zn(const RingSpec& spec, const RingOptions& opt) {
  if (spec.n < 2) throw SpecError("zn requires n >= 2");
  check_cap(spec.n, opt, spec.describe());
  FiniteRing::Tables t;
  const std::size_t n = spec.n;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Elem>((a + b) % n);
      t.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  t.zero = 0;
  t.one = 1;
  for (std::size_t a = 0; a < n; ++a) t.labels.push_back(std::to_string(a));
  return std::make_shared<const FiniteRing>(std::move(t), spec, opt);
}

RingPtr build_product(const RingSpec& spec, const RingOptions& opt) {
  if (spec.factors.size() < 2) throw SpecError("product requires at least two factors");
  std::vector<RingPtr> parts;
  std::uint64_t size = 1;
  for (const auto& f : spec.factors) {
    parts.push_back(build_ring(f, opt));
    size *= parts.back()->size();
    check_cap(size, opt, spec.describe());
  }
  const std::size_t n = size;
  const std::size_t k = parts.size();
  std::vector<std::vector<Elem>> digits(n, std::vector<Elem>(k));
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t rest = a;
    for (std::size_t i = k; i-- > 0;) {
      digits[a][i] = static_cast<Elem>(rest % parts[i]->size());
      rest /= parts[i]->size();
    }
  }
  auto compose = [&](auto&& op) {
    std::vector<Elem> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < k; ++i) idx = idx * parts[i]->size() + op(i, digits[a][i], digits[b][i]);
        table[a * n + b] = static_cast<Elem>(idx);
      }
    return table;
  };
  FiniteRing::Tables t;
  t.size = n;
  t.add = compose([&](std::size_t i, Elem x, Elem y) { return parts[i]->add(x, y); });
  t.mul = compose([&](std::size_t i, Elem x, Elem y) { return parts[i]->mul(x, y); });
  t.zero = 0;
  std::size_t one = 0;
  for (std::size_t i = 0; i < k; ++i) one = one * parts[i]->size() + parts[i]->one();
  t.one = static_cast<Elem>(one);
  for (std::size_t a = 0; a < n; ++a) {
    std::string l = "(";
    for (std::size_t i = 0; i < k; ++i) l += (i ? "," : "") + parts[i]->label(digits[a][i]);
    t.labels.push_back(l + ")");
  }
  return std::make_shared<const FiniteRing>(std::move(t), spec, opt, std::move(parts));
}

RingPtr build_trunc_poly(const RingSpec& spec, const RingOptions& opt) {
  if (!is_prime(spec.p)) throw SpecError("trunc_poly requires a prime p, got " + std::to_string(spec.p));
  if (spec.vars < 1) throw SpecError("trunc_poly requires vars >= 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i <= spec.vars; ++i) {
    size *= spec.p;
    check_cap(size, opt, spec.describe());
  }
  const std::size_t n = size;
  const std::uint32_t p = spec.p;
  const std::uint32_t v = spec.vars;
  // coefficient vector (c0, c1..cv); c_i for i>=1 is digit i-1, c0 is digit v.
  std::vector<std::vector<std::uint32_t>> coef(n, std::vector<std::uint32_t>(v + 1));
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t rest = a;
    for (std::uint32_t i = 1; i <= v; ++i) {
      coef[a][i] = rest % p;
      rest /= p;
    }
    coef[a][0] = static_cast<std::uint32_t>(rest);
  }
  auto index_of = [&](const std::vector<std::uint32_t>& c) {
    std::size_t idx = c[0];
    for (std::uint32_t i = v; i >= 1; --i) idx = idx * p + c[i];
    return static_cast<Elem>(idx);
  };
  FiniteRing::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<std::uint32_t> c(v + 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::uint32_t i = 0; i <= v; ++i) c[i] = (coef[a][i] + coef[b][i]) % p;
      t.add[a * n + b] = index_of(c);
      c[0] = coef[a][0] * coef[b][0] % p;
      for (std::uint32_t i = 1; i <= v; ++i) c[i] = (coef[a][0] * coef[b][i] + coef[b][0] * coef[a][i]) % p;
      t.mul[a * n + b] = index_of(c);
    }
  t.zero = 0;
  std::vector<std::uint32_t> unit(v + 1, 0);
  unit[0] = 1;
  t.one = index_of(unit);
  for (std::size_t a = 0; a < n; ++a) {
    std::string l;
    auto term = [&](const std::string& s) { l += (l.empty() ? "" : "+") + s; };
    if (coef[a][0] != 0) term(std::to_string(coef[a][0]));
    for (std::uint32_t i = 1; i <= v; ++i) {
      if (coef[a][i] == 0) continue;
      term((coef[a][i] == 1 ? "" : std::to_string(coef[a][i])) + var_name(i - 1, v));
    }
    t.labels.push_back(l.empty() ? "0" : l);
  }
  return std::make_shared<const FiniteRing>(std::move(t), spec, opt);
}

}  // namespace

RingPtr build_ring(const RingSpec& spec, const RingOptions& options) {
  switch (spec.kind) {
    case RingKind::zn:
      return build_zn(spec, options);
    case RingKind::product:
      return build_product(spec, options);
    case RingKind::trunc_poly:
      return build_trunc_poly(spec, options);
    case RingKind::localization: {
      if (!spec.base) throw SpecError("localization without a base ring");
      auto base = build_ring(*spec.base, options);
      return localize_ring(base, spec.mult_set_generators).ring;
    }
  }
  throw SpecError("unknown ring kind");
}

// ---------------------------------------------------------------------------
// Ideals

Ideal ideal_generated(const FiniteRing& ring, std::span<const Elem> gens) {
  ElementSet h(ring.size());
  h.set(ring.zero());
  std::vector<Elem> kept;
  for (Elem g : gens) {
    if (g >= ring.size()) throw SpecError("ideal generator out of range");
    if (h.test(g)) continue;
    kept.push_back(g);
    ElementSet joined = h;
    // H + Rg is the union of cosets H + x over x in Rg.
    const std::vector<Elem> base = h.members();
    ring.principal(g).for_each([&](Elem x) {
      for (Elem y : base) joined.set(ring.add(y, x));
    });
    h = std::move(joined);
  }
  return Ideal{&ring, std::move(h), std::move(kept)};
}

Ideal ideal_from_members(const FiniteRing& ring, ElementSet members) {
  if (members.universe() != ring.size()) throw MismatchError("member set over a different ring");
  std::vector<Elem> gens;
  ElementSet h(ring.size());
  h.set(ring.zero());
  members.for_each([&](Elem a) {
    if (h.test(a)) return;
    gens.push_back(a);
    const auto base = h.members();
    ring.principal(a).for_each([&](Elem x) {
      for (Elem y : base) h.set(ring.add(y, x));
    });
  });
  if (!(h == members)) throw SpecError("member set is not an ideal");
  return Ideal{&ring, std::move(members), std::move(gens)};
}

Ideal zero_ideal(const FiniteRing& ring) { return ideal_generated(ring, {}); }

Ideal unit_ideal(const FiniteRing& ring) {
  const Elem one = ring.one();
  return ideal_generated(ring, std::span<const Elem>(&one, 1));
}

const std::vector<Ideal>& ideal_lattice(const FiniteRing& ring) { return ring.ideals(); }

namespace {

const FiniteRing& same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring == nullptr || a.ring != b.ring) throw MismatchError("ideals over different rings");
  return *a.ring;
}

const std::vector<Elem>& gens_or_members(const Ideal& i, std::vector<Elem>& scratch) {
  if (!i.generators.empty() || i.is_zero()) return i.generators;
  scratch = i.members.members();
  return scratch;
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  const auto& r = same_ring(a, b);
  std::vector<Elem> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return ideal_generated(r, gens);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  const auto& r = same_ring(a, b);
  std::vector<Elem> sa, sb;
  const auto& ga = gens_or_members(a, sa);
  const auto& gb = gens_or_members(b, sb);
  std::vector<Elem> gens;
  for (Elem x : ga)
    for (Elem y : gb) gens.push_back(r.mul(x, y));
  return ideal_generated(r, gens);
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  const auto& r = same_ring(a, b);
  return ideal_from_members(r, a.members & b.members);
}

Ideal ideal_power(const Ideal& a, unsigned k) {
  if (k == 0) throw SpecError("ideal_power requires k >= 1");
  Ideal out = a;
  for (unsigned i = 1; i < k; ++i) {
    Ideal next = ideal_product(out, a);
    if (next == out) break;
    out = std::move(next);
  }
  return out;
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  const auto& r = same_ring(a, b);
  std::vector<Elem> sb;
  const auto& gb = gens_or_members(b, sb);
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool ok = true;
    for (Elem g : gb)
      if (!a.members.test(r.mul(x, g))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return ideal_from_members(r, std::move(out));
}

std::vector<Ideal> ideal_power_chain(const Ideal& a) {
  std::vector<Ideal> chain{a};
  for (;;) {
    Ideal next = ideal_product(chain.back(), a);
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

Ideal jacobson_radical(const FiniteRing& ring) {
  ElementSet j = ElementSet::full(ring.size());
  for (const auto& m : ring.maximal_ideals()) j &= m.members;
  return ideal_from_members(ring, std::move(j));
}

// ---------------------------------------------------------------------------
// Localization

ElementSet multiplicative_closure(const FiniteRing& ring, std::span<const Elem> gens) {
  ElementSet s(ring.size());
  std::deque<Elem> todo{ring.one()};
  s.set(ring.one());
  while (!todo.empty()) {
    const Elem x = todo.front();
    todo.pop_front();
    for (Elem g : gens) {
      if (g >= ring.size()) throw SpecError("multiplicative generator out of range");
      const Elem y = ring.mul(x, g);
      if (!s.test(y)) {
        s.set(y);
        todo.push_back(y);
      }
    }
  }
  return s;
}

LocalizedRing localize_ring(const RingPtr& ring, std::span<const Elem> s_gens) {
  const FiniteRing& r = *ring;
  const std::size_t n = r.size();
  ElementSet s = multiplicative_closure(r, s_gens);
  if (s.test(r.zero())) throw SpecError("multiplicative set contains zero; the localization is the zero ring");
  ElementSet torsion(n);
  const auto s_list = s.members();
  for (Elem x = 0; x < n; ++x)
    for (Elem u : s_list)
      if (r.mul(u, x) == r.zero()) {
        torsion.set(x);
        break;
      }

  // (a,s) ~ (b,t) iff at - bs is S-torsion.
  const std::size_t k = s_list.size();
  std::vector<std::uint32_t> cls(n * k);
  std::vector<std::pair<Elem, Elem>> reps;
  for (Elem a = 0; a < n; ++a)
    for (std::size_t j = 0; j < k; ++j) {
      const Elem sj = s_list[j];
      std::uint32_t found = static_cast<std::uint32_t>(reps.size());
      for (std::uint32_t c = 0; c < reps.size(); ++c) {
        const auto [b, t] = reps[c];
        if (torsion.test(r.sub(r.mul(a, t), r.mul(b, sj)))) {
          found = c;
          break;
        }
      }
      if (found == reps.size()) reps.emplace_back(a, sj);
      cls[a * k + j] = found;
    }
  std::vector<std::size_t> s_pos(n, k);
  for (std::size_t j = 0; j < k; ++j) s_pos[s_list[j]] = j;
  auto class_of = [&](Elem a, Elem t) { return static_cast<Elem>(cls[a * k + s_pos[t]]); };

  const std::size_t m = reps.size();
  FiniteRing::Tables t;
  t.size = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const auto [a, sa] = reps[x];
      const auto [b, sb] = reps[y];
      const Elem st = r.mul(sa, sb);
      t.add[x * m + y] = class_of(r.add(r.mul(a, sb), r.mul(b, sa)), st);
      t.mul[x * m + y] = class_of(r.mul(a, b), st);
    }
  t.zero = class_of(r.zero(), r.one());
  t.one = class_of(r.one(), r.one());
  for (const auto& [a, sa] : reps)
    t.labels.push_back(sa == r.one() ? r.label(a) : r.label(a) + "/" + r.label(sa));

  RingSpec spec = RingSpec::localization(r.spec(), std::vector<Elem>(s_gens.begin(), s_gens.end()));
  LocalizedRing out;
  out.ring = std::make_shared<const FiniteRing>(std::move(t), std::move(spec), r.options());
  out.canonical.source = &r;
  out.canonical.target = out.ring;
  out.canonical.image.resize(n);
  for (Elem a = 0; a < n; ++a) out.canonical.image[a] = class_of(a, r.one());
  out.multiplicative_set = std::move(s);
  out.s_torsion = std::move(torsion);
  out.representatives = std::move(reps);
  return out;
}

// ---------------------------------------------------------------------------
// Ideal predicates

IdealReport classify_ideal(const FiniteRing& ring, const Ideal& ideal) {
  if (ideal.ring != &ring) throw MismatchError("classify_ideal: ideal over a different ring");
  IdealReport rep;
  rep.proper = ideal.is_proper();
  if (!rep.proper) return rep;
  const auto& in = ideal.members;
  const std::size_t n = ring.size();

  std::optional<std::array<Elem, 2>> pw;
  for (Elem x = 0; x < n; ++x) {
    if (in.test(x)) continue;
    for (Elem y = 0; y < n; ++y) {
      if (in.test(y) || !in.test(ring.mul(x, y))) continue;
      if (!pw || std::array<Elem, 3>{x + y, x, y} <
                     std::array<Elem, 3>{(*pw)[0] + (*pw)[1], (*pw)[0], (*pw)[1]})
        pw = std::array<Elem, 2>{x, y};
    }
  }
  rep.prime = !pw.has_value();
  rep.prime_witness = pw;
  rep.maximal = std::find(ring.maximal_ideals().begin(), ring.maximal_ideals().end(), ideal) !=
                ring.maximal_ideals().end();

  const ScalarDomain dom(ring, ScalarMode::ring, true);
  rep.one_abs_witness = min_absorbing_violation(ring, dom, in, in);
  rep.one_abs_prime = !rep.one_abs_witness.has_value();
  ElementSet nonzero = in;
  nonzero.reset(ring.zero());
  rep.weakly_one_abs_witness = min_absorbing_violation(ring, dom, in, nonzero);
  rep.weakly_one_abs_prime = !rep.weakly_one_abs_witness.has_value();
  return rep;
}

URingVerdict is_u_ring(const FiniteRing& ring) {
  URingVerdict v;
  const auto& lattice = ring.ideals();
  for (const auto& i : lattice) {
    ElementSet cover(ring.size());
    for (const auto& j : lattice)
      if (!i.members.is_subset_of(j.members)) cover |= j.members;
    if (!i.members.is_subset_of(cover)) continue;
    v.holds = false;
    v.witness = i;
    ElementSet covered(ring.size());
    covered.set(ring.zero());
    for (const auto& j : lattice) {
      if (i.members.is_subset_of(j.members)) continue;
      ElementSet gain = j.members & i.members;
      gain.subtract(covered);
      if (gain.none()) continue;
      covered |= gain;
      v.covering_family.push_back(j);
      if (i.members.is_subset_of(covered)) break;
    }
    return v;
  }
  return v;
}

EveryIdealVerdict every_proper_ideal_w1a(const FiniteRing& ring) {
  EveryIdealVerdict v;
  for (const auto& i : ring.ideals()) {
    if (!i.is_proper()) continue;
    auto rep = classify_ideal(ring, i);
    if (!rep.weakly_one_abs_prime) {
      v.holds = false;
      v.witness_ideal = i;
      v.witness_triple = rep.weakly_one_abs_witness;
      return v;
    }
  }
  return v;
}

bool local_cube_zero_or_two_fields(const FiniteRing& ring) {
  const auto& maxs = ring.maximal_ideals();
  if (maxs.size() == 1) return ideal_power(maxs.front(), 3).is_zero();
  return maxs.size() == 2 && jacobson_radical(ring).is_zero();
}

bool z_ideal_w1a(std::uint64_t d) { return d == 0 || is_prime(d); }

std::optional<std::array<std::uint64_t, 3>> z_ideal_w1a_witness(std::uint64_t d, std::uint64_t bound) {
  if (d <= 1) return std::nullopt;
  const std::uint64_t max_sum = 4 + bound / 4;
  for (std::uint64_t s = 6; s <= max_sum; ++s)
    for (std::uint64_t x = 2; x + 4 <= s; ++x)
      for (std::uint64_t y = 2; x + y + 2 <= s; ++y) {
        const std::uint64_t z = s - x - y;
        const std::uint64_t prod = x * y * z;
        if (prod > bound) continue;
        if (prod % d == 0 && (x * y) % d != 0 && z % d != 0) return std::array<std::uint64_t, 3>{x, y, z};
      }
  return std::nullopt;
}

bool validate_z_ideal_rule(std::uint64_t max_d) {
  for (std::uint64_t d = 0; d <= max_d; ++d) {
    if (d == 1) {
      // Z itself is not proper; the rule must reject it.
      if (z_ideal_w1a(1)) return false;
      continue;
    }
    const bool searched = !z_ideal_w1a_witness(d, d * d).has_value();
    if (searched != z_ideal_w1a(d)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

std::size_t additive_order(const FiniteRing& r, Elem a) {
  std::size_t k = 1;
  for (Elem x = a; x != r.zero(); x = r.add(x, a)) ++k;
  return a == r.zero() ? 1 : k;
}

}  // namespace

std::optional<std::vector<Elem>> ring_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.units().count() != b.units().count()) return std::nullopt;
  const auto& gens = a.additive_generators();
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto ord = additive_order(a, gens[i]);
    for (Elem y = 0; y < n; ++y)
      if (additive_order(b, y) == ord) cands[i].push_back(y);
    if (cands[i].empty()) return std::nullopt;
  }
  std::vector<std::size_t> pick(gens.size(), 0);
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> f(n);
  for (;;) {
    std::fill(f.begin(), f.end(), kUnset);
    f[a.zero()] = b.zero();
    std::deque<Elem> todo{a.zero()};
    bool ok = true;
    while (!todo.empty() && ok) {
      const Elem x = todo.front();
      todo.pop_front();
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const Elem y = a.add(x, gens[i]);
        const Elem fy = b.add(f[x], cands[i][pick[i]]);
        if (f[y] == kUnset) {
          f[y] = fy;
          todo.push_back(y);
        } else if (f[y] != fy) {
          ok = false;
        }
      }
    }
    if (ok && f[a.one()] == b.one()) {
      ElementSet hit(n);
      for (Elem x = 0; x < n; ++x) hit.set(f[x]);
      ok = hit.count() == n;
      for (Elem x = 0; x < n && ok; ++x)
        for (Elem y = 0; y < n && ok; ++y) ok = f[a.mul(x, y)] == b.mul(f[x], f[y]);
      if (ok) return f;
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == cands[i].size()) pick[i++] = 0;
    if (i == pick.size()) return std::nullopt;
  }
}

}  // namespace plab
