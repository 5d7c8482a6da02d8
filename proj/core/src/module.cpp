#include "plab/module.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "group_util.hpp"

namespace plab {

// ---------------------------------------------------------------------------
// ModuleSpec

ModuleSpec ModuleSpec::ring_as_module(RingSpec ring, ScalarMode mode) {
  ModuleSpec s;
  s.kind = ModuleKind::ring_as_module;
  s.ring = std::move(ring);
  s.scalar_mode = mode;
  return s;
}

ModuleSpec ModuleSpec::free(RingSpec ring, std::uint32_t rank, ScalarMode mode) {
  ModuleSpec s;
  s.kind = ModuleKind::free;
  s.ring = std::move(ring);
  s.rank = rank;
  s.scalar_mode = mode;
  return s;
}

ModuleSpec ModuleSpec::quotient(ModuleSpec base, std::vector<Elem> kernel_generators) {
  ModuleSpec s;
  s.kind = ModuleKind::quotient;
  s.ring = base.ring;
  s.scalar_mode = base.scalar_mode;
  s.base = std::make_shared<const ModuleSpec>(std::move(base));
  s.kernel_generators = std::move(kernel_generators);
  return s;
}

ModuleSpec ModuleSpec::product(std::vector<ModuleSpec> factors, bool over_product_ring) {
  ModuleSpec s;
  s.kind = ModuleKind::product;
  s.over_product_ring = over_product_ring;
  if (!factors.empty()) {
    s.scalar_mode = factors.front().scalar_mode;
    if (over_product_ring) {
      std::vector<RingSpec> rings;
      for (const auto& f : factors) rings.push_back(f.ring);
      s.ring = RingSpec::product(std::move(rings));
    } else {
      s.ring = factors.front().ring;
    }
  }
  s.factors = std::move(factors);
  return s;
}

ModuleSpec ModuleSpec::cyclic_quotient(RingSpec ring, std::vector<Elem> ideal_generators, ScalarMode mode) {
  ModuleSpec s;
  s.kind = ModuleKind::cyclic_quotient;
  s.ring = std::move(ring);
  s.ideal_generators = std::move(ideal_generators);
  s.scalar_mode = mode;
  return s;
}

ModuleSpec ModuleSpec::localization(ModuleSpec base, std::vector<Elem> mult_set_generators) {
  ModuleSpec s;
  s.kind = ModuleKind::localization;
  s.ring = RingSpec::localization(base.ring, mult_set_generators);
  s.scalar_mode = base.scalar_mode;
  s.base = std::make_shared<const ModuleSpec>(std::move(base));
  s.mult_set_generators = std::move(mult_set_generators);
  return s;
}

namespace {

std::string join_elems(const std::vector<Elem>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string ModuleSpec::describe() const {
  const std::string suffix = scalar_mode == ScalarMode::integer_image ? " over Z" : "";
  switch (kind) {
    case ModuleKind::ring_as_module:
      return ring.describe() + suffix;
    case ModuleKind::free:
      return ring.describe() + "^" + std::to_string(rank) + suffix;
    case ModuleKind::quotient:
      return "(" + (base ? base->describe() : std::string("?")) + ")/<" + join_elems(kernel_generators) + ">";
    case ModuleKind::product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x " : "") + factors[i].describe();
      return over_product_ring ? "[" + out + "] over " + ring.describe() : out;
    }
    case ModuleKind::cyclic_quotient:
      return ring.describe() + "/(" + join_elems(ideal_generators) + ")" + suffix;
    case ModuleKind::localization:
      return "S^-1(" + (base ? base->describe() : std::string("?")) + ")<" + join_elems(mult_set_generators) + ">";
  }
  return "?";
}

bool operator==(const ModuleSpec& a, const ModuleSpec& b) {
  if (a.kind != b.kind || a.scalar_mode != b.scalar_mode || !(a.ring == b.ring)) return false;
  auto same_base = [&] {
    if (!a.base || !b.base) return a.base == b.base;
    return *a.base == *b.base;
  };
  switch (a.kind) {
    case ModuleKind::ring_as_module:
      return true;
    case ModuleKind::free:
      return a.rank == b.rank;
    case ModuleKind::quotient:
      return same_base() && a.kernel_generators == b.kernel_generators;
    case ModuleKind::product:
      return a.over_product_ring == b.over_product_ring && a.factors == b.factors;
    case ModuleKind::cyclic_quotient:
      return a.ideal_generators == b.ideal_generators;
    case ModuleKind::localization:
      return same_base() && a.mult_set_generators == b.mult_set_generators;
  }
  return false;
}

// ---------------------------------------------------------------------------
// FiniteModule

bool Submodule::is_proper() const { return module == nullptr || members.count() < module->size(); }

struct ModuleBuilderAccess {
  static void set_quotient(FiniteModule& q, ModulePtr base, std::vector<Elem> projection) {
    q.quotient_base_ = std::move(base);
    q.quotient_projection_ = std::move(projection);
  }
};

FiniteModule::FiniteModule(RingPtr ring, Tables t, ModuleSpec spec, ModuleOptions options,
                           std::vector<ModulePtr> components)
    : ring_(std::move(ring)),
      size_(t.size),
      add_(std::move(t.add)),
      act_(std::move(t.act)),
      zero_(t.zero),
      labels_(std::move(t.labels)),
      spec_(std::move(spec)),
      options_(options),
      components_(std::move(components)) {
  if (!ring_) throw SpecError("module without a ring");
  if (size_ < 2) throw SpecError(spec_.describe() + ": the zero module is not allowed");
  if (size_ > options_.module_cap)
    throw CapExceeded(spec_.describe() + " has " + std::to_string(size_) + " elements, module cap is " +
                      std::to_string(options_.module_cap));
  if (spec_.scalar_mode == ScalarMode::integer_image && ring_->spec().kind != RingKind::zn)
    throw SpecError("integer_image scalar mode needs a Z_n ring, got " + ring_->spec().describe());
  if (add_.size() != size_ * size_ || act_.size() != ring_->size() * size_)
    throw SpecError("module tables have the wrong shape");
  if (labels_.size() != size_) {
    labels_.resize(size_);
    for (std::size_t i = 0; i < size_; ++i) labels_[i] = std::to_string(i);
  }
  neg_.assign(size_, zero_);
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b)
      if (add(a, b) == zero_) {
        neg_[a] = b;
        break;
      }
  scan_axioms();
  derive_structure();
}

void FiniteModule::scan_axioms() const {
  const std::size_t n = size_;
  const FiniteRing& r = *ring_;
  auto fail = [&](const std::string& what) {
    throw AxiomError(spec_.describe() + ": module axiom failed: " + what);
  };
  if (zero_ >= n) fail("zero out of range");
  for (Elem a = 0; a < n; ++a) {
    if (add(a, zero_) != a) fail("additive identity");
    if (add(a, neg_[a]) != zero_) fail("additive inverse");
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) >= n) fail("table entry out of range");
      if (add(a, b) != add(b, a)) fail("additive commutativity");
    }
  }
  for (Elem x = 0; x < r.size(); ++x)
    for (Elem m = 0; m < n; ++m)
      if (act(x, m) >= n) fail("action entry out of range");

  // Additive generators by reachability from zero. Associativity against a
  // generating set suffices (Light's test), and every later check that runs
  // over generators relies on the same reachability.
  std::vector<Elem> gens;
  ElementSet reach(n);
  reach.set(zero_);
  while (reach.count() < n) {
    Elem g = 0;
    while (reach.test(g)) ++g;
    gens.push_back(g);
    std::deque<Elem> todo;
    reach.for_each([&](Elem e) { todo.push_back(e); });
    while (!todo.empty()) {
      const Elem x = todo.front();
      todo.pop_front();
      for (Elem h : gens) {
        const Elem y = add(x, h);
        if (!reach.test(y)) {
          reach.set(y);
          todo.push_back(y);
        }
      }
    }
  }
  for (Elem g : gens)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (add(add(x, y), g) != add(x, add(y, g))) fail("additive associativity");

  const auto& rgens = r.additive_generators();
  for (Elem m = 0; m < n; ++m) {
    if (act(r.one(), m) != m) fail("unital action");
    for (Elem x = 0; x < r.size(); ++x) {
      for (Elem g : gens)
        if (act(x, add(m, g)) != add(act(x, m), act(x, g))) fail("action is not additive in the module");
      for (Elem s : rgens)
        if (act(r.add(x, s), m) != add(act(x, m), act(s, m))) fail("action is not additive in the ring");
      for (Elem s = 0; s < r.size(); ++s)
        if (act(r.mul(x, s), m) != act(x, act(s, m))) fail("action is not associative");
    }
  }
}

void FiniteModule::derive_structure() {
  const FiniteRing& r = *ring_;
  nonunits_ = ScalarDomain(r, spec_.scalar_mode, true);
  all_ = ScalarDomain(r, spec_.scalar_mode, false);
  ann_.assign(size_, ElementSet(r.size()));
  cyclic_.assign(size_, ElementSet(size_));
  for (Elem m = 0; m < size_; ++m)
    for (Elem x = 0; x < r.size(); ++x) {
      const Elem y = act(x, m);
      cyclic_[m].set(y);
      if (y == zero_) ann_[m].set(x);
    }
  ElementSet h(size_);
  h.set(zero_);
  for (Elem m = 0; m < size_; ++m) {
    if (h.test(m)) continue;
    add_gens_.push_back(m);
    detail::join_cyclic(add_, size_, h, m);
  }
  ElementSet g(size_);
  g.set(zero_);
  for (Elem m = 0; m < size_; ++m) {
    if (g.test(m)) continue;
    gens_hint_.push_back(m);
    detail::join_subgroup(add_, size_, g, cyclic_[m]);
  }
}

Elem FiniteModule::compose(std::span<const Elem> parts) const {
  if (parts.size() != components_.size()) throw SpecError("compose: wrong number of components");
  Elem idx = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] >= components_[i]->size()) throw SpecError("compose: component out of range");
    idx = static_cast<Elem>(idx * components_[i]->size() + parts[i]);
  }
  return idx;
}

std::vector<Elem> FiniteModule::decompose(Elem m) const {
  std::vector<Elem> parts(components_.size());
  for (std::size_t i = components_.size(); i-- > 0;) {
    const auto s = static_cast<Elem>(components_[i]->size());
    parts[i] = m % s;
    m /= s;
  }
  return parts;
}

bool FiniteModule::lattice_available() const {
  if (size_ > options_.lattice_module_max) return false;
  try {
    (void)lattice();
    return true;
  } catch (const CapExceeded&) {
    return false;
  }
}

const std::vector<Submodule>& FiniteModule::lattice() const {
  if (size_ > options_.lattice_module_max)
    throw CapExceeded(spec_.describe() + ": " + std::to_string(size_) +
                      " elements is past the full-lattice limit " + std::to_string(options_.lattice_module_max));
  std::call_once(lattice_once_, [this] {
    std::vector<std::pair<const ElementSet*, Elem>> cyclics;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen_cyclic;
    for (Elem m = 0; m < size_; ++m)
      if (seen_cyclic.emplace(cyclic_[m], cyclics.size()).second) cyclics.emplace_back(&cyclic_[m], m);
    std::vector<Submodule> found;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
    Submodule zero{this, ElementSet(size_), {}};
    zero.members.set(zero_);
    index.emplace(zero.members, 0);
    found.push_back(std::move(zero));
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (const auto& [c, g] : cyclics) {
        if (c->is_subset_of(found[i].members)) continue;
        ElementSet joined = found[i].members;
        detail::join_subgroup(add_, size_, joined, *c);
        if (index.contains(joined)) continue;
        if (found.size() >= options_.lattice_cap) {
          lattice_error_ = spec_.describe() + ": submodule lattice exceeds cap " + std::to_string(options_.lattice_cap);
          return;
        }
        auto gens = found[i].generators;
        gens.push_back(g);
        index.emplace(joined, found.size());
        found.push_back(Submodule{this, std::move(joined), std::move(gens)});
      }
    }
    std::sort(found.begin(), found.end(),
              [](const Submodule& a, const Submodule& b) { return canonical_less(a.members, b.members); });
    lattice_ = std::move(found);
  });
  if (!lattice_error_.empty()) throw CapExceeded(lattice_error_);
  return lattice_;
}

// ---------------------------------------------------------------------------
// Submodules and colons

Submodule submodule_generated(const FiniteModule& m, std::span<const Elem> gens) {
  ElementSet h(m.size());
  h.set(m.zero());
  std::vector<Elem> kept;
  for (Elem g : gens) {
    if (g >= m.size()) throw SpecError("submodule generator out of range");
    if (h.test(g)) continue;
    kept.push_back(g);
    detail::join_subgroup(m.add_table(), m.size(), h, m.cyclic(g));
  }
  return Submodule{&m, std::move(h), std::move(kept)};
}

Submodule submodule_from_members(const FiniteModule& m, ElementSet members) {
  if (members.universe() != m.size()) throw MismatchError("member set over a different module");
  auto s = submodule_generated(m, members.members());
  if (!(s.members == members)) throw SpecError("member set is not a submodule");
  return s;
}

Submodule zero_submodule(const FiniteModule& m) { return submodule_generated(m, {}); }

Submodule whole_module(const FiniteModule& m) { return submodule_generated(m, m.generators_hint()); }

const std::vector<Submodule>& submodule_lattice(const FiniteModule& m) { return m.lattice(); }

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  if (a.module == nullptr || a.module != b.module) throw MismatchError("submodules of different modules");
  std::vector<Elem> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return submodule_generated(*a.module, gens);
}

namespace {

std::vector<Elem> ideal_gens(const Ideal& i) {
  if (!i.generators.empty() || i.is_zero()) return i.generators;
  return i.members.members();
}

const FiniteModule& module_of(const Submodule& n) {
  if (n.module == nullptr) throw MismatchError("detached submodule");
  return *n.module;
}

}  // namespace

Submodule ideal_times_submodule(const Ideal& i, const Submodule& k) {
  const auto& m = module_of(k);
  if (i.ring == nullptr || !(i.ring->spec() == m.ring().spec()) || i.ring->size() != m.ring().size())
    throw MismatchError("ideal over a different ring than the module");
  std::vector<Elem> gens;
  for (Elem g : ideal_gens(i))
    for (Elem x : k.generators) gens.push_back(m.act(g, x));
  return submodule_generated(m, gens);
}

std::uint64_t integer_generator(const Ideal& ideal) {
  if (ideal.ring == nullptr || ideal.ring->spec().kind != RingKind::zn)
    throw SpecError("integer generator needs an ideal of Z_n");
  for (Elem r = 1; r < ideal.ring->size(); ++r)
    if (ideal.contains(r)) return r;
  return ideal.ring->size();
}

ColonIdeal colon_ring(const Submodule& n, std::span<const Elem> k) {
  const auto& m = module_of(n);
  const FiniteRing& r = m.ring();
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool ok = true;
    for (Elem e : k)
      if (!n.members.test(m.act(x, e))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  ColonIdeal c{ideal_from_members(r, std::move(out)), std::nullopt};
  if (m.mode() == ScalarMode::integer_image) c.integer_generator = integer_generator(c.ideal);
  return c;
}

ColonIdeal colon_ring(const Submodule& n, const Submodule& k) {
  if (n.module != k.module) throw MismatchError("colon of submodules of different modules");
  return colon_ring(n, std::span<const Elem>(k.generators));
}

Submodule colon_module(const Submodule& n, const Ideal& j) {
  const auto& m = module_of(n);
  if (j.ring == nullptr || !(j.ring->spec() == m.ring().spec())) throw MismatchError("ideal over a different ring");
  const auto gens = ideal_gens(j);
  ElementSet out(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    bool ok = true;
    for (Elem g : gens)
      if (!n.members.test(m.act(g, x))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return submodule_from_members(m, std::move(out));
}

Submodule colon_module(const Submodule& n, Elem scalar) {
  const auto& m = module_of(n);
  if (scalar >= m.ring().size()) throw SpecError("scalar out of range");
  ElementSet out(m.size());
  for (Elem x = 0; x < m.size(); ++x)
    if (n.members.test(m.act(scalar, x))) out.set(x);
  return submodule_from_members(m, std::move(out));
}

Ideal module_annihilator(const FiniteModule& m) {
  auto z = zero_submodule(m);
  return colon_ring(z, std::span<const Elem>(m.generators_hint())).ideal;
}

// ---------------------------------------------------------------------------
// Homomorphisms

Submodule ModuleHom::kernel() const {
  ElementSet k(source->size());
  for (Elem x = 0; x < source->size(); ++x)
    if (map[x] == target->zero()) k.set(x);
  return submodule_from_members(*source, std::move(k));
}

Submodule ModuleHom::image_of(const Submodule& n) const {
  if (n.module != source) throw MismatchError("image_of: submodule of another module");
  std::vector<Elem> imgs;
  n.members.for_each([&](Elem x) { imgs.push_back(map[x]); });
  return submodule_generated(*target, imgs);
}

Submodule ModuleHom::preimage_of(const Submodule& n) const {
  if (n.module != target) throw MismatchError("preimage_of: submodule of another module");
  ElementSet k(source->size());
  for (Elem x = 0; x < source->size(); ++x)
    if (n.members.test(map[x])) k.set(x);
  return submodule_from_members(*source, std::move(k));
}

std::vector<ModuleHom> enumerate_homs(const FiniteModule& src, const FiniteModule& dst, std::size_t cap) {
  if (!(src.ring().spec() == dst.ring().spec()) || src.mode() != dst.mode())
    throw MismatchError("homomorphisms need modules over the same ring and scalar mode");
  const FiniteRing& r = src.ring();
  const auto& gens = src.generators_hint();
  std::vector<std::vector<Elem>> cands(gens.size());
  double total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem y = 0; y < dst.size(); ++y)
      if (src.annihilator(gens[i]).is_subset_of(dst.annihilator(y))) cands[i].push_back(y);
    total *= static_cast<double>(cands[i].size());
  }
  if (total > static_cast<double>(cap))
    throw CapExceeded("hom enumeration " + src.spec().describe() + " -> " + dst.spec().describe() + " needs " +
                      std::to_string(static_cast<std::uint64_t>(total)) + " candidates, cap is " +
                      std::to_string(cap));

  // Steps a.g_i for additive generators a of R generate M additively.
  struct Step {
    Elem elem;
    std::size_t gen;
    Elem scalar;
  };
  std::vector<Step> steps;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem a : r.additive_generators()) steps.push_back({src.act(a, gens[i]), i, a});

  std::vector<ModuleHom> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> f(src.size());
  std::deque<Elem> todo;
  for (;;) {
    std::fill(f.begin(), f.end(), kUnset);
    f[src.zero()] = dst.zero();
    todo.assign(1, src.zero());
    bool ok = true;
    while (!todo.empty() && ok) {
      const Elem x = todo.front();
      todo.pop_front();
      for (const auto& s : steps) {
        const Elem y = src.add(x, s.elem);
        const Elem fy = dst.add(f[x], dst.act(s.scalar, cands[s.gen][pick[s.gen]]));
        if (f[y] == kUnset) {
          f[y] = fy;
          todo.push_back(y);
        } else if (f[y] != fy) {
          ok = false;
          break;
        }
      }
    }
    for (Elem x = 0; x < src.size() && ok; ++x)
      for (Elem a = 0; a < r.size() && ok; ++a) ok = f[src.act(a, x)] == dst.act(a, f[x]);
    if (ok) {
      ModuleHom h{&src, &dst, f, false, false};
      ElementSet hit(dst.size());
      for (Elem y : f) hit.set(y);
      h.epi = hit.count() == dst.size();
      std::size_t zeros = 0;
      for (Elem y : f) zeros += y == dst.zero();
      h.mono = zeros == 1;
      out.push_back(std::move(h));
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == cands[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

ModulePtr build_ring_module(const RingPtr& ring, ModuleSpec spec, const ModuleOptions& opt) {
  const std::size_t n = ring->size();
  FiniteModule::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.act.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      t.add[a * n + b] = ring->add(a, b);
      t.act[a * n + b] = ring->mul(a, b);
    }
  t.zero = ring->zero();
  for (Elem a = 0; a < n; ++a) t.labels.push_back(ring->label(a));
  return std::make_shared<const FiniteModule>(ring, std::move(t), std::move(spec), opt);
}

ModulePtr build_product(std::span<const ModulePtr> factors, bool over_product_ring, ModuleSpec spec,
                        const ModuleOptions& opt) {
  if (factors.size() < 2) throw SpecError("a product needs at least two factors");
  RingPtr ring;
  if (over_product_ring) {
    std::vector<RingSpec> rs;
    for (const auto& f : factors) {
      if (f->mode() != ScalarMode::ring) throw SpecError("product-ring modules need ring scalar mode");
      rs.push_back(f->ring().spec());
    }
    ring = build_ring(RingSpec::product(std::move(rs)), opt.ring);
  } else {
    ring = factors.front()->ring_ptr();
    for (const auto& f : factors)
      if (!(f->ring().spec() == ring->spec()) || f->mode() != factors.front()->mode())
        throw MismatchError("same-ring product needs equal rings and scalar modes");
  }
  std::uint64_t size = 1;
  for (const auto& f : factors) {
    size *= f->size();
    if (size > opt.module_cap)
      throw CapExceeded(spec.describe() + " exceeds the module cap " + std::to_string(opt.module_cap));
  }
  const std::size_t n = size;
  const std::size_t k = factors.size();
  std::vector<Elem> digits(n * k);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t rest = a;
    for (std::size_t i = k; i-- > 0;) {
      digits[a * k + i] = static_cast<Elem>(rest % factors[i]->size());
      rest /= factors[i]->size();
    }
  }
  FiniteModule::Tables t;
  t.size = n;
  t.add.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < k; ++i)
        idx = idx * factors[i]->size() + factors[i]->add(digits[a * k + i], digits[b * k + i]);
      t.add[a * n + b] = static_cast<Elem>(idx);
    }
  t.act.resize(ring->size() * n);
  for (Elem x = 0; x < ring->size(); ++x) {
    std::vector<Elem> rx(k, x);
    if (over_product_ring) rx = ring->decompose(x);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < k; ++i) idx = idx * factors[i]->size() + factors[i]->act(rx[i], digits[a * k + i]);
      t.act[x * n + a] = static_cast<Elem>(idx);
    }
  }
  std::size_t zero = 0;
  for (std::size_t i = 0; i < k; ++i) zero = zero * factors[i]->size() + factors[i]->zero();
  t.zero = static_cast<Elem>(zero);
  for (std::size_t a = 0; a < n; ++a) {
    std::string l = "(";
    for (std::size_t i = 0; i < k; ++i) l += (i ? "," : "") + factors[i]->label(digits[a * k + i]);
    t.labels.push_back(l + ")");
  }
  return std::make_shared<const FiniteModule>(ring, std::move(t), std::move(spec), opt,
                                              std::vector<ModulePtr>(factors.begin(), factors.end()));
}

QuotientModule build_quotient(const ModulePtr& base, const Submodule& l, ModuleSpec spec) {
  const FiniteModule& m = *base;
  if (l.module != &m) throw MismatchError("quotient by a submodule of another module");
  if (!l.is_proper()) throw SpecError("quotient M/M is the zero module");
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> cls(m.size(), kUnset);
  std::vector<Elem> reps;
  const auto lm = l.members.members();
  for (Elem x = 0; x < m.size(); ++x) {
    if (cls[x] != kUnset) continue;
    const auto c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem y : lm) cls[m.add(x, y)] = c;
  }
  const std::size_t n = reps.size();
  const FiniteRing& r = m.ring();
  FiniteModule::Tables t;
  t.size = n;
  t.add.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.add[a * n + b] = cls[m.add(reps[a], reps[b])];
  t.act.resize(r.size() * n);
  for (Elem x = 0; x < r.size(); ++x)
    for (std::size_t a = 0; a < n; ++a) t.act[x * n + a] = cls[m.act(x, reps[a])];
  t.zero = cls[m.zero()];
  for (Elem x : reps) t.labels.push_back("[" + m.label(x) + "]");
  auto q = std::make_shared<FiniteModule>(m.ring_ptr(), std::move(t), std::move(spec), m.options());
  ModuleBuilderAccess::set_quotient(*q, base, cls);
  QuotientModule out;
  out.module = q;
  out.projection = ModuleHom{&m, q.get(), std::move(cls), false, true};
  out.projection.mono = l.is_zero();
  return out;
}

}  // namespace

QuotientModule quotient_module(const ModulePtr& m, const Submodule& l) {
  return build_quotient(m, l, ModuleSpec::quotient(m->spec(), l.generators));
}

ModulePtr direct_product(std::span<const ModulePtr> factors, bool over_product_ring) {
  std::vector<ModuleSpec> specs;
  for (const auto& f : factors) specs.push_back(f->spec());
  return build_product(factors, over_product_ring, ModuleSpec::product(std::move(specs), over_product_ring),
                       factors.empty() ? ModuleOptions{} : factors.front()->options());
}

Submodule product_submodule(const FiniteModule& product, std::span<const Submodule> parts) {
  const auto& comps = product.components();
  if (parts.size() != comps.size()) throw MismatchError("product_submodule: wrong number of parts");
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].module != comps[i].get()) throw MismatchError("product_submodule: part over another module");
  ElementSet s(product.size());
  for (Elem x = 0; x < product.size(); ++x) {
    const auto d = product.decompose(x);
    bool in = true;
    for (std::size_t i = 0; i < d.size() && in; ++i) in = parts[i].members.test(d[i]);
    if (in) s.set(x);
  }
  return submodule_from_members(product, std::move(s));
}

namespace {

LocalizedModule build_localization(const ModulePtr& base, std::span<const Elem> s_gens, ModuleSpec spec) {
  const FiniteModule& m = *base;
  if (m.mode() != ScalarMode::ring) throw SpecError("module localization needs ring scalar mode");
  LocalizedModule out;
  out.ring = localize_ring(m.ring_ptr(), s_gens);
  const FiniteRing& r = m.ring();
  const auto s_list = out.ring.multiplicative_set.members();
  ElementSet torsion(m.size());
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem u : s_list)
      if (m.act(u, x) == m.zero()) {
        torsion.set(x);
        break;
      }
  const std::size_t k = s_list.size();
  std::vector<std::size_t> s_pos(r.size(), k);
  for (std::size_t j = 0; j < k; ++j) s_pos[s_list[j]] = j;
  std::vector<Elem> cls(m.size() * k);
  std::vector<std::pair<Elem, Elem>> reps;
  for (Elem x = 0; x < m.size(); ++x)
    for (std::size_t j = 0; j < k; ++j) {
      const Elem s = s_list[j];
      auto found = static_cast<Elem>(reps.size());
      for (Elem c = 0; c < reps.size(); ++c) {
        const auto [y, t] = reps[c];
        if (torsion.test(m.sub(m.act(t, x), m.act(s, y)))) {
          found = c;
          break;
        }
      }
      if (found == reps.size()) reps.emplace_back(x, s);
      cls[x * k + j] = found;
    }
  auto class_of = [&](Elem x, Elem s) { return cls[x * k + s_pos[s]]; };
  const FiniteRing& lr = *out.ring.ring;
  const std::size_t n = reps.size();
  FiniteModule::Tables t;
  t.size = n;
  t.add.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto [x, s] = reps[a];
      const auto [y, u] = reps[b];
      t.add[a * n + b] = class_of(m.add(m.act(u, x), m.act(s, y)), r.mul(s, u));
    }
  t.act.resize(lr.size() * n);
  for (Elem e = 0; e < lr.size(); ++e) {
    const auto [a, se] = out.ring.representatives[e];
    for (std::size_t b = 0; b < n; ++b) {
      const auto [y, u] = reps[b];
      t.act[e * n + b] = class_of(m.act(a, y), r.mul(se, u));
    }
  }
  t.zero = class_of(m.zero(), r.one());
  for (const auto& [x, s] : reps) t.labels.push_back(s == r.one() ? m.label(x) : m.label(x) + "/" + r.label(s));
  out.module = std::make_shared<const FiniteModule>(out.ring.ring, std::move(t), std::move(spec), m.options());
  out.canonical.resize(m.size());
  for (Elem x = 0; x < m.size(); ++x) out.canonical[x] = class_of(x, r.one());
  out.s_torsion = std::move(torsion);
  return out;
}

}  // namespace

LocalizedModule localize_module(const ModulePtr& m, std::span<const Elem> s_gens) {
  return build_localization(m, s_gens,
                            ModuleSpec::localization(m->spec(), std::vector<Elem>(s_gens.begin(), s_gens.end())));
}

Submodule LocalizedModule::localize(const Submodule& n) const {
  std::vector<Elem> imgs;
  n.members.for_each([&](Elem x) { imgs.push_back(canonical[x]); });
  return submodule_generated(*module, imgs);
}

TensorFree tensor_free(const ModulePtr& m, unsigned k, const Submodule& n) {
  if (k == 0) throw SpecError("tensor_free needs k >= 1");
  if (n.module != m.get()) throw MismatchError("tensor_free: submodule of another module");
  if (k == 1) return TensorFree{m, n};
  std::vector<ModulePtr> copies(k, m);
  TensorFree out;
  out.module = direct_product(copies);
  std::vector<Submodule> parts(k, n);
  out.sub = product_submodule(*out.module, parts);
  const FiniteRing& r = m->ring();
  for (Elem a = 0; a < r.size(); ++a) {
    const auto lhs = colon_module(out.sub, a);
    const auto rhs_part = colon_module(n, a);
    std::vector<Submodule> rp(k, rhs_part);
    if (!(lhs == product_submodule(*out.module, rp)))
      throw AxiomError("colon identity (N^k : a) = (N : a)^k fails for a = " + r.label(a));
  }
  return out;
}

MultProfile multiplication_profile(const FiniteModule& m) {
  MultProfile p;
  p.is_multiplication = true;
  const auto whole = whole_module(m);
  for (const auto& n : m.lattice()) {
    const auto c = colon_ring(n, whole).ideal;
    if (!(ideal_times_submodule(c, whole) == n)) {
      p.is_multiplication = false;
      p.failing_submodule = n;
      break;
    }
  }
  return p;
}

Submodule submodule_product(const Submodule& n, const Submodule& k) {
  const auto& m = module_of(n);
  if (k.module != &m) throw MismatchError("submodule_product: different modules");
  const auto whole = whole_module(m);
  const auto i = colon_ring(n, whole).ideal;
  const auto j = colon_ring(k, whole).ideal;
  return ideal_times_submodule(ideal_product(i, j), whole);
}

ModuleProfile module_profile(const FiniteModule& m) {
  ModuleProfile p;
  const FiniteRing& r = m.ring();
  for (Elem x = 0; x < m.size(); ++x)
    if (m.cyclic(x).count() == m.size()) {
      p.cyclic = true;
      p.cyclic_generator = x;
      break;
    }
  p.faithful = m.mode() == ScalarMode::ring && module_annihilator(m).is_zero();
  p.reduced = true;
  for (Elem x = 0; x < m.size() && p.reduced; ++x)
    for (Elem a = 0; a < r.size(); ++a)
      if (m.act(r.mul(a, a), x) == m.zero() && m.act(a, x) != m.zero()) {
        p.reduced = false;
        p.reduced_witness = std::array<Elem, 2>{a, x};
        break;
      }
  p.torsion = ElementSet(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    // Over the integers n annihilates everything, so every element is torsion.
    const bool torsion = m.mode() == ScalarMode::integer_image || m.annihilator(x).count() > 1;
    if (torsion) p.torsion.set(x);
  }
  p.torsion_module = p.torsion.count() == m.size();
  p.non_torsion = !p.torsion_module;
  return p;
}

bool integer_image_quantifier_sound(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t r = 0; r < n; ++r) {
    bool found = false;
    for (std::uint64_t k = 0; k <= 2 && !found; ++k) found = r + k * n != 1;
    if (!found) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ModulePtr build_module(const ModuleSpec& spec, const ModuleOptions& options) {
  switch (spec.kind) {
    case ModuleKind::ring_as_module:
      return build_ring_module(build_ring(spec.ring, options.ring), spec, options);
    case ModuleKind::free: {
      if (spec.rank < 1) throw SpecError("free module needs rank >= 1");
      auto ring = build_ring(spec.ring, options.ring);
      auto r = build_ring_module(ring, ModuleSpec::ring_as_module(spec.ring, spec.scalar_mode), options);
      if (spec.rank == 1) return build_ring_module(ring, spec, options);
      std::vector<ModulePtr> copies(spec.rank, r);
      return build_product(copies, false, spec, options);
    }
    case ModuleKind::quotient: {
      if (!spec.base) throw SpecError("quotient without a base module");
      auto base = build_module(*spec.base, options);
      auto l = submodule_generated(*base, spec.kernel_generators);
      return build_quotient(base, l, spec).module;
    }
    case ModuleKind::product: {
      std::vector<ModulePtr> fs;
      for (const auto& f : spec.factors) fs.push_back(build_module(f, options));
      return build_product(fs, spec.over_product_ring, spec, options);
    }
    case ModuleKind::cyclic_quotient: {
      auto ring = build_ring(spec.ring, options.ring);
      auto r = build_ring_module(ring, ModuleSpec::ring_as_module(spec.ring, spec.scalar_mode), options);
      const auto ideal = ideal_generated(*ring, spec.ideal_generators);
      Submodule l{r.get(), ideal.members, ideal.generators};
      return build_quotient(r, l, spec).module;
    }
    case ModuleKind::localization: {
      if (!spec.base) throw SpecError("localization without a base module");
      auto base = build_module(*spec.base, options);
      return build_localization(base, spec.mult_set_generators, spec).module;
    }
  }
  throw SpecError("unknown module kind");
}

}  // namespace plab
