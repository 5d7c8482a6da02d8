#include "plab/classify.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace plab {

namespace {

constexpr std::size_t kNoGroup = std::numeric_limits<std::size_t>::max();

using Key3 = std::array<std::uint64_t, 3>;

ElementSet minus(ElementSet a, const ElementSet& b) { return a.subtract(b); }

/// {x : x.g in target for every g in gens}.
ElementSet colon_by_gens(const FiniteRing& r, const ElementSet& target, std::span<const Elem> gens) {
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool ok = true;
    for (Elem g : gens)
      if (!target.test(r.mul(x, g))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return out;
}

std::vector<Elem> generators_of(const Ideal& i) {
  if (!i.generators.empty() || i.is_zero()) return i.generators;
  return i.members.members();
}

ElementSet scale_set(const FiniteRing& r, Elem a, const ElementSet& s) {
  ElementSet out(r.size());
  s.for_each([&](Elem x) { out.set(r.mul(a, x)); });
  return out;
}

ModulePtr non_owning(const FiniteModule* m) { return ModulePtr(std::shared_ptr<const FiniteModule>(), m); }

// Shared per-(C, Z) condition forms. C is a colon ideal (N :_R X) and Z the
// annihilator of X, for X a single element or a submodule.

std::optional<Witness> absorbing_form(const ModuleContext& ctx, const ElementSet& c, const ElementSet& z) {
  auto t = min_absorbing_violation(ctx.ring(), ctx.nonunits(), c, minus(c, z));
  if (!t) return std::nullopt;
  return Witness{{(*t)[0], (*t)[1], (*t)[2]}, std::nullopt, {}, std::nullopt};
}

// 0 != p J X in N  =>  p X in N or J X in N.
std::optional<Witness> product_ideal_form(const ModuleContext& ctx, const ElementSet& c, const ElementSet& z) {
  const auto& dom = ctx.nonunits();
  const auto& ideals = ctx.proper_ideals();
  std::optional<Witness> best;
  std::array<std::uint64_t, 3> best_key{};
  for (Elem p : dom.products()) {
    if (c.test(p)) continue;
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      const auto& s = ctx.element_ideal(p, j);
      if (!s.is_subset_of(c) || s.is_subset_of(z) || ideals[j].members.is_subset_of(c)) continue;
      const auto f = dom.min_factor(p);
      const auto key = weight_key(dom, f);
      if (!best || key < best_key) {
        best = Witness{{f[0], f[1]}, std::nullopt, {j}, std::nullopt};
        best_key = key;
      }
      break;
    }
  }
  return best;
}

// 0 != IJK X in N  =>  IJ X in N or K X in N.
std::optional<Witness> triple_ideal_form(const ModuleContext& ctx, const ElementSet& c, const ElementSet& z) {
  const auto n = ctx.proper_ideals().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = ctx.ideal_product2(i, j).members;
      if (ij.is_subset_of(c)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const auto& s = ctx.ideal_product3(i, j, k);
        if (!s.is_subset_of(c) || s.is_subset_of(z)) continue;
        if (ctx.proper_ideals()[k].members.is_subset_of(c)) continue;
        return Witness{{}, std::nullopt, {i, j, k}, std::nullopt};
      }
    }
  return std::nullopt;
}

}  // namespace

const char* to_string(PredicateId id) noexcept {
  switch (id) {
    case PredicateId::prime: return "PRIME";
    case PredicateId::classical_prime: return "CLASSICAL_PRIME";
    case PredicateId::weakly_classical_prime: return "WEAKLY_CLASSICAL_PRIME";
    case PredicateId::c1a: return "C1A";
    case PredicateId::wc1a: return "WC1A";
    case PredicateId::weakly_1abs_submodule: return "WEAKLY_1ABS_SUBMODULE";
    case PredicateId::weakly_semiprime: return "WEAKLY_SEMIPRIME";
    case PredicateId::nilpotent: return "NILPOTENT";
  }
  return "?";
}

std::optional<PredicateId> predicate_from_string(const std::string& s) {
  for (auto id : kAllPredicates)
    if (s == to_string(id)) return id;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// ModuleContext

ModuleContext::ModuleContext(ModulePtr module) : module_(std::move(module)) {
  const FiniteRing& r = ring();
  const FiniteModule& m = *module_;
  for (const auto& i : r.ideals())
    if (i.is_proper() || m.mode() == ScalarMode::integer_image) proper_ideals_.push_back(i);
  const auto np = proper_ideals_.size();
  const auto& scal = nonunits().scalars();
  scalar_ideal_.reserve(scal.size() * np);
  for (Elem a : scal)
    for (const auto& i : proper_ideals_) {
      scalar_ideal_.push_back(scale_set(r, a, i.members));
      std::vector<Elem> g;
      for (Elem x : generators_of(i)) g.push_back(r.mul(a, x));
      scalar_ideal_gens_.push_back(std::move(g));
    }
  element_ideal_.reserve(r.size() * np);
  for (Elem p = 0; p < r.size(); ++p)
    for (const auto& i : proper_ideals_) element_ideal_.push_back(scale_set(r, p, i.members));
  prod2_.reserve(np * np);
  for (const auto& i : proper_ideals_)
    for (const auto& j : proper_ideals_) prod2_.push_back(ideal_product(i, j));
  ann_by_.assign(r.size(), ElementSet(m.size()));
  for (Elem x = 0; x < r.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (m.act(x, y) == m.zero()) ann_by_[x].set(y);
}

void ModuleContext::build_products3() const {
  std::call_once(prod3_once_, [this] {
    const auto np = proper_ideals_.size();
    if (np * np * np > 4'000'000)
      throw CapExceeded("too many ideal triples for " + ring().spec().describe());
    prod3_.reserve(np * np * np);
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = 0; j < np; ++j)
        for (const auto& k : proper_ideals_) prod3_.push_back(ideal_product(prod2_[i * np + j], k).members);
    const auto& scal = nonunits().scalars();
    scalar_prod2_.reserve(scal.size() * np * np);
    for (Elem a : scal)
      for (const auto& ij : prod2_) scalar_prod2_.push_back(scale_set(ring(), a, ij.members));
  });
}

const ElementSet& ModuleContext::ideal_product3(std::size_t i, std::size_t j, std::size_t k) const {
  build_products3();
  const auto n = proper_ideals_.size();
  return prod3_[(i * n + j) * n + k];
}

const ElementSet& ModuleContext::scalar_ideal_product(std::size_t i, std::size_t j, std::size_t k) const {
  build_products3();
  const auto n = proper_ideals_.size();
  return scalar_prod2_[(i * n + j) * n + k];
}

// ---------------------------------------------------------------------------
// SubmoduleAnalyzer

SubmoduleAnalyzer::SubmoduleAnalyzer(ContextPtr ctx, Submodule n) : ctx_(std::move(ctx)), n_(std::move(n)) {
  const FiniteModule& m = ctx_->module();
  const FiniteRing& r = m.ring();
  if (n_.module != &m) throw MismatchError("submodule does not belong to the analysed module");
  if (!n_.is_proper()) throw SpecError("predicates need a proper submodule");
  colon_.assign(m.size(), ElementSet(r.size()));
  colon_by_.assign(r.size(), ElementSet(m.size()));
  for (Elem x = 0; x < r.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (n_.members.test(m.act(x, y))) {
        colon_[y].set(x);
        colon_by_[x].set(y);
      }
  module_colon_ = ElementSet::full(r.size());
  for (Elem y = 0; y < m.size(); ++y) module_colon_ &= colon_[y];

  struct PairHash {
    std::size_t operator()(const std::pair<ElementSet, ElementSet>& p) const noexcept {
      return p.first.hash() * 31 + p.second.hash();
    }
  };
  std::unordered_map<std::pair<ElementSet, ElementSet>, std::size_t, PairHash> index;
  group_of_.assign(m.size(), kNoGroup);
  for (Elem y = 0; y < m.size(); ++y) {
    if (n_.members.test(y)) continue;
    auto key = std::make_pair(colon_[y], m.annihilator(y));
    auto [it, fresh] = index.emplace(std::move(key), groups_.size());
    if (fresh) groups_.push_back(Group{colon_[y], m.annihilator(y), y, 0});
    groups_[it->second].count++;
    group_of_[y] = it->second;
  }
}

template <class F>
Verdict SubmoduleAnalyzer::scan_groups(F&& per_group) const {
  Verdict v;
  for (const auto& g : groups_) {
    v.instances_scanned += g.count;
    std::optional<Witness> w = per_group(g);
    if (w) {
      if (!w->element && !w->submodule) w->element = g.first;
      v.holds = false;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

Verdict SubmoduleAnalyzer::check(PredicateId id) const {
  const auto& ctx = *ctx_;
  const FiniteRing& r = ctx.ring();
  const auto& dom = ctx.nonunits();
  const auto& all = ctx.all();
  switch (id) {
    case PredicateId::wc1a:
      return scan_groups([&](const Group& g) { return absorbing_form(ctx, g.colon, g.ann); });
    case PredicateId::c1a:
      return scan_groups([&](const Group& g) -> std::optional<Witness> {
        auto t = min_absorbing_violation(r, dom, g.colon, g.colon);
        if (!t) return std::nullopt;
        return Witness{{(*t)[0], (*t)[1], (*t)[2]}, std::nullopt, {}, std::nullopt};
      });
    case PredicateId::prime:
      return scan_groups([&](const Group& g) -> std::optional<Witness> {
        for (Elem x : all.scalars())
          if (g.colon.test(x) && !module_colon_.test(x)) return Witness{{x}, std::nullopt, {}, std::nullopt};
        return std::nullopt;
      });
    case PredicateId::classical_prime:
    case PredicateId::weakly_classical_prime: {
      const bool weak = id == PredicateId::weakly_classical_prime;
      return scan_groups([&](const Group& g) -> std::optional<Witness> {
        std::optional<Witness> best;
        Key3 best_key{};
        for (Elem x : all.scalars()) {
          if (g.colon.test(x)) continue;
          for (Elem y : all.scalars()) {
            if (g.colon.test(y)) continue;
            const Elem xy = r.mul(x, y);
            if (!g.colon.test(xy) || (weak && g.ann.test(xy))) continue;
            const Key3 key{all.weight(x) + all.weight(y), all.weight(x), all.weight(y)};
            if (!best || key < best_key) {
              best = Witness{{x, y}, std::nullopt, {}, std::nullopt};
              best_key = key;
            }
          }
        }
        return best;
      });
    }
    case PredicateId::weakly_1abs_submodule:
      return scan_groups([&](const Group& g) -> std::optional<Witness> {
        std::optional<Witness> best;
        std::array<std::uint64_t, 3> best_key{};
        for (Elem p : dom.products()) {
          if (!g.colon.test(p) || g.ann.test(p) || module_colon_.test(p)) continue;
          const auto f = dom.min_factor(p);
          const auto key = weight_key(dom, f);
          if (!best || key < best_key) {
            best = Witness{{f[0], f[1]}, std::nullopt, {}, std::nullopt};
            best_key = key;
          }
        }
        return best;
      });
    case PredicateId::weakly_semiprime:
      return scan_groups([&](const Group& g) -> std::optional<Witness> {
        for (Elem a : all.scalars()) {
          const Elem a2 = r.mul(a, a);
          if (!g.colon.test(a) && g.colon.test(a2) && !g.ann.test(a2))
            return Witness{{a}, std::nullopt, {}, std::nullopt};
        }
        return std::nullopt;
      });
    case PredicateId::nilpotent: {
      Verdict v;
      const auto colon = ideal_from_members(r, module_colon_);
      const auto chain = ideal_power_chain(colon);
      v.holds = false;
      for (std::size_t k = 0; k < chain.size(); ++k) {
        ++v.instances_scanned;
        if (ideal_times_submodule(chain[k], n_).is_zero()) {
          v.holds = true;
          v.exponent = static_cast<unsigned>(k + 1);
          break;
        }
      }
      return v;
    }
  }
  throw SpecError("unknown predicate");
}

bool SubmoduleAnalyzer::is_quadruple_zero(Elem a, Elem b, Elem c, Elem m) const {
  const FiniteModule& mod = ctx_->module();
  const FiniteRing& r = mod.ring();
  const auto& d = ctx_->nonunits().members();
  if (!d.test(a) || !d.test(b) || !d.test(c)) return false;
  const Elem ab = r.mul(a, b);
  return mod.act(r.mul(ab, c), m) == mod.zero() && !n_.members.test(mod.act(ab, m)) &&
         !n_.members.test(mod.act(c, m));
}

std::vector<QuadrupleZero> SubmoduleAnalyzer::quadruple_zeros(std::size_t limit) const {
  std::vector<QuadrupleZero> out;
  if (limit == 0) return out;
  const auto& dom = ctx_->nonunits();
  const FiniteRing& r = ctx_->ring();
  std::map<std::size_t, std::vector<std::array<Elem, 3>>> cache;
  for (Elem m = 0; m < group_of_.size(); ++m) {
    const auto gi = group_of_[m];
    if (gi == kNoGroup) continue;
    auto it = cache.find(gi);
    if (it == cache.end()) {
      const auto& g = groups_[gi];
      std::vector<std::array<Elem, 3>> triples;
      for (Elem a : dom.scalars())
        for (Elem b : dom.scalars()) {
          const Elem ab = r.mul(a, b);
          if (g.colon.test(ab)) continue;
          for (Elem c : dom.scalars())
            if (!g.colon.test(c) && g.ann.test(r.mul(ab, c))) triples.push_back({a, b, c});
        }
      std::sort(triples.begin(), triples.end(),
                [&](const auto& x, const auto& y) { return weight_key(dom, x) < weight_key(dom, y); });
      it = cache.emplace(gi, std::move(triples)).first;
    }
    for (const auto& t : it->second) {
      out.push_back({t[0], t[1], t[2], m});
      if (out.size() >= limit) return out;
    }
  }
  return out;
}

ClassificationReport SubmoduleAnalyzer::classify() const {
  ClassificationReport rep;
  for (auto id : kAllPredicates) rep.verdicts[static_cast<std::size_t>(id)] = check(id);
  rep.quadruple_zeros = quadruple_zeros(16);
  const FiniteRing& r = ctx_->ring();
  const bool integer = ctx_->module().mode() == ScalarMode::integer_image;
  std::vector<std::optional<ColonSummary>> per_group(groups_.size());
  for (Elem m = 0; m < group_of_.size(); ++m) {
    const auto gi = group_of_[m];
    if (gi == kNoGroup) continue;
    if (!per_group[gi]) {
      ColonSummary s;
      s.colon = ideal_from_members(r, groups_[gi].colon);
      if (integer) {
        s.integer_generator = integer_generator(s.colon);
        s.weakly_one_abs_prime = z_ideal_w1a(*s.integer_generator);
      } else {
        s.weakly_one_abs_prime = classify_ideal(r, s.colon).weakly_one_abs_prime;
      }
      per_group[gi] = std::move(s);
    }
    ColonSummary s = *per_group[gi];
    s.element = m;
    rep.colons.push_back(std::move(s));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Characterization conditions

Verdict SubmoduleAnalyzer::tmain1(int k) const {
  const auto& ctx = *ctx_;
  const FiniteModule& mod = ctx.module();
  const FiniteRing& r = ctx.ring();
  const auto& dom = ctx.nonunits();
  switch (k) {
    case 1:
      return check(PredicateId::wc1a);
    case 2: {
      // (N:_M abc) = (0:_M abc) u (N:_M ab) u (N:_M c), compared as element sets.
      Verdict v;
      std::optional<std::pair<Elem, std::array<std::uint64_t, 4>>> best;
      for (Elem p : dom.products())
        for (Elem c : dom.scalars()) {
          ++v.instances_scanned;
          const Elem pc = r.mul(p, c);
          ElementSet rhs = ctx.module_annihilated_by(pc);
          rhs |= colon_by_[p];
          rhs |= colon_by_[c];
          if (colon_by_[pc] == rhs) continue;
          const Elem m = minus(colon_by_[pc], rhs).first();
          const auto f = dom.min_factor(p);
          const std::array<Elem, 3> t{f[0], f[1], c};
          const auto key = weight_key(dom, t);
          if (!best || std::make_pair(m, key) < *best) {
            best = std::make_pair(m, key);
            v.holds = false;
            v.witness = Witness{{t[0], t[1], t[2]}, m, {}, std::nullopt};
          }
        }
      return v;
    }
    case 3:
    case 4:
      return scan_groups([&](const Group& g) -> std::optional<Witness> {
        for (Elem p : dom.products()) {
          if (g.colon.test(p)) continue;  // abm in N
          const Elem y = mod.act(p, g.first);
          const auto& cy = colon_[y];
          const auto& zy = mod.annihilator(y);
          const bool ok = k == 3 ? cy == (zy | g.colon) : (cy == zy || cy == g.colon);
          if (!ok) {
            const auto f = dom.min_factor(p);
            return Witness{{f[0], f[1]}, std::nullopt, {}, std::nullopt};
          }
        }
        return std::nullopt;
      });
    case 5:
      return scan_groups([&](const Group& g) { return product_ideal_form(ctx, g.colon, g.ann); });
    case 6:
      return scan_groups([&](const Group& g) -> std::optional<Witness> {
        const auto& scal = dom.scalars();
        const auto np = ctx.proper_ideals().size();
        for (std::size_t ai = 0; ai < scal.size(); ++ai)
          for (Elem b : scal) {
            if (g.colon.test(b)) continue;  // bm in N
            const Elem p = r.mul(scal[ai], b);
            for (std::size_t j = 0; j < np; ++j) {
              const auto& s = ctx.element_ideal(p, j);
              if (!s.is_subset_of(g.colon) || s.is_subset_of(g.ann)) continue;
              if (ctx.scalar_ideal(ai, j).is_subset_of(g.colon)) continue;
              return Witness{{scal[ai], b}, std::nullopt, {j}, std::nullopt};
            }
          }
        return std::nullopt;
      });
    case 7:
      return scan_groups([&](const Group& g) -> std::optional<Witness> {
        const auto& scal = dom.scalars();
        const auto np = ctx.proper_ideals().size();
        for (std::size_t ai = 0; ai < scal.size(); ++ai)
          for (std::size_t j = 0; j < np; ++j) {
            if (ctx.scalar_ideal(ai, j).is_subset_of(g.colon)) continue;  // aIm in N
            const auto& gens = ctx.scalar_ideal_gens(ai, j);
            const auto q1 = colon_by_gens(r, g.colon, gens);
            if (q1 == g.colon || q1 == colon_by_gens(r, g.ann, gens)) continue;
            return Witness{{scal[ai]}, std::nullopt, {j}, std::nullopt};
          }
        return std::nullopt;
      });
    case 8:
      return scan_groups([&](const Group& g) { return triple_ideal_form(ctx, g.colon, g.ann); });
    default:
      throw SpecError("condition index must be in 1..8");
  }
}

const std::vector<SubmoduleAnalyzer::LatticeGroup>& SubmoduleAnalyzer::lattice_groups() const {
  if (lattice_groups_) return *lattice_groups_;
  const FiniteModule& mod = ctx_->module();
  const FiniteRing& r = mod.ring();
  const auto& lattice = mod.lattice();
  std::vector<LatticeGroup> out;
  std::unordered_map<ElementSet, std::vector<std::size_t>, ElementSetHash> by_colon;
  for (std::size_t li = 0; li < lattice.size(); ++li) {
    ElementSet c = ElementSet::full(r.size());
    ElementSet z = ElementSet::full(r.size());
    for (Elem g : lattice[li].generators) {
      c &= colon_[g];
      z &= mod.annihilator(g);
    }
    auto& bucket = by_colon[c];
    const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t gi) { return out[gi].ann == z; });
    if (seen) continue;
    bucket.push_back(out.size());
    out.push_back(LatticeGroup{std::move(c), std::move(z), li});
  }
  lattice_groups_ = std::move(out);
  return *lattice_groups_;
}

Verdict SubmoduleAnalyzer::tmain2(int k) const {
  const auto& ctx = *ctx_;
  const FiniteRing& r = ctx.ring();
  const auto& dom = ctx.nonunits();
  if (k == 1) return check(PredicateId::wc1a);
  if (k == 2) {
    Verdict v;
    for (Elem p : dom.products())
      for (Elem c : dom.scalars()) {
        ++v.instances_scanned;
        const auto& lhs = colon_by_[r.mul(p, c)];
        if (lhs == colon_by_[p] || lhs == colon_by_[c] || lhs == ctx.module_annihilated_by(r.mul(p, c))) continue;
        const auto f = dom.min_factor(p);
        v.holds = false;
        v.witness = Witness{{f[0], f[1], c}, std::nullopt, {}, std::nullopt};
        return v;
      }
    return v;
  }
  if (k < 3 || k > 8) throw SpecError("condition index must be in 1..8");

  const auto& lgroups = lattice_groups();
  const auto np = ctx.proper_ideals().size();
  auto eval = [&](const LatticeGroup& g) -> std::optional<Witness> {
    switch (k) {
      case 3:
        return absorbing_form(ctx, g.colon, g.ann);
      case 4:
        for (Elem p : dom.products()) {
          if (g.colon.test(p)) continue;
          const Elem pe[1] = {p};
          const auto q1 = colon_by_gens(r, g.colon, pe);
          if (q1 == g.colon || q1 == colon_by_gens(r, g.ann, pe)) continue;
          const auto f = dom.min_factor(p);
          return Witness{{f[0], f[1]}, std::nullopt, {}, std::nullopt};
        }
        return std::nullopt;
      case 5:
        return product_ideal_form(ctx, g.colon, g.ann);
      case 6:
        for (std::size_t ai = 0; ai < dom.scalars().size(); ++ai)
          for (std::size_t i = 0; i < np; ++i) {
            if (ctx.scalar_ideal(ai, i).is_subset_of(g.colon)) continue;
            for (std::size_t j = 0; j < np; ++j) {
              const auto& s = ctx.scalar_ideal_product(ai, i, j);
              if (!s.is_subset_of(g.colon) || s.is_subset_of(g.ann)) continue;
              if (ctx.proper_ideals()[j].members.is_subset_of(g.colon)) continue;
              return Witness{{dom.scalars()[ai]}, std::nullopt, {i, j}, std::nullopt};
            }
          }
        return std::nullopt;
      case 7:
        for (std::size_t i = 0; i < np; ++i)
          for (std::size_t j = 0; j < np; ++j) {
            const auto& ij = ctx.ideal_product2(i, j);
            if (ij.members.is_subset_of(g.colon)) continue;
            const auto gens = generators_of(ij);
            const auto q1 = colon_by_gens(r, g.colon, gens);
            if (q1 == g.colon || q1 == colon_by_gens(r, g.ann, gens)) continue;
            return Witness{{}, std::nullopt, {i, j}, std::nullopt};
          }
        return std::nullopt;
      case 8:
        return triple_ideal_form(ctx, g.colon, g.ann);
    }
    return std::nullopt;
  };

  Verdict v;
  for (const auto& g : lgroups) {
    ++v.instances_scanned;
    if (auto w = eval(g)) {
      w->submodule = g.first;
      v.holds = false;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Free functions

Verdict check_predicate(const Submodule& n, PredicateId id) {
  return SubmoduleAnalyzer(std::make_shared<const ModuleContext>(non_owning(n.module)), n).check(id);
}

ClassificationReport classify_submodule(const Submodule& n) {
  return SubmoduleAnalyzer(std::make_shared<const ModuleContext>(non_owning(n.module)), n).classify();
}

std::vector<QuadrupleZero> find_quadruple_zeros(const Submodule& n, std::size_t limit) {
  return SubmoduleAnalyzer(std::make_shared<const ModuleContext>(non_owning(n.module)), n).quadruple_zeros(limit);
}

Verdict tmain_condition(const Submodule& n, TmainTheorem theorem, int k) {
  SubmoduleAnalyzer a(std::make_shared<const ModuleContext>(non_owning(n.module)), n);
  return theorem == TmainTheorem::tmain1 ? a.tmain1(k) : a.tmain2(k);
}

bool replay_witness(const Submodule& n, PredicateId id, const Witness& w) {
  if (n.module == nullptr || !w.element) return false;
  const FiniteModule& mod = *n.module;
  const FiniteRing& r = mod.ring();
  const Elem m = *w.element;
  const auto& s = w.scalars;
  const auto& nonunits = mod.nonunit_scalars().members();
  auto in = [&](Elem x) { return n.members.test(x); };
  auto act = [&](Elem x, Elem y) { return mod.act(x, y); };
  const Elem zero = mod.zero();
  switch (id) {
    case PredicateId::c1a:
    case PredicateId::wc1a: {
      if (s.size() != 3 || !nonunits.test(s[0]) || !nonunits.test(s[1]) || !nonunits.test(s[2])) return false;
      const Elem ab = r.mul(s[0], s[1]);
      const Elem abcm = act(r.mul(ab, s[2]), m);
      if (id == PredicateId::wc1a && abcm == zero) return false;
      return in(abcm) && !in(act(ab, m)) && !in(act(s[2], m));
    }
    case PredicateId::prime: {
      if (s.size() != 1 || in(m) || !in(act(s[0], m))) return false;
      for (Elem y = 0; y < mod.size(); ++y)
        if (!in(act(s[0], y))) return true;
      return false;
    }
    case PredicateId::classical_prime:
    case PredicateId::weakly_classical_prime: {
      if (s.size() != 2) return false;
      const Elem xym = act(r.mul(s[0], s[1]), m);
      if (id == PredicateId::weakly_classical_prime && xym == zero) return false;
      return in(xym) && !in(act(s[0], m)) && !in(act(s[1], m));
    }
    case PredicateId::weakly_1abs_submodule: {
      if (s.size() != 2 || !nonunits.test(s[0]) || !nonunits.test(s[1])) return false;
      const Elem ab = r.mul(s[0], s[1]);
      const Elem abm = act(ab, m);
      if (abm == zero || !in(abm) || in(m)) return false;
      for (Elem y = 0; y < mod.size(); ++y)
        if (!in(act(ab, y))) return true;
      return false;
    }
    case PredicateId::weakly_semiprime: {
      if (s.size() != 1) return false;
      const Elem a2m = act(r.mul(s[0], s[0]), m);
      return a2m != zero && in(a2m) && !in(act(s[0], m));
    }
    case PredicateId::nilpotent:
      return false;
  }
  return false;
}

std::vector<std::string> implication_violations(const ClassificationReport& r, const ModuleProfile& profile) {
  std::vector<std::string> out;
  auto h = [&](PredicateId id) { return r[id].holds; };
  auto imp = [&](PredicateId a, PredicateId b) {
    if (h(a) && !h(b)) out.push_back(std::string(to_string(a)) + " => " + to_string(b));
  };
  imp(PredicateId::prime, PredicateId::classical_prime);
  imp(PredicateId::classical_prime, PredicateId::weakly_classical_prime);
  imp(PredicateId::weakly_classical_prime, PredicateId::wc1a);
  imp(PredicateId::c1a, PredicateId::wc1a);
  imp(PredicateId::weakly_1abs_submodule, PredicateId::wc1a);
  imp(PredicateId::weakly_classical_prime, PredicateId::weakly_semiprime);
  if (profile.reduced &&
      h(PredicateId::weakly_classical_prime) != (h(PredicateId::weakly_semiprime) && h(PredicateId::wc1a)))
    out.push_back("reduced: WEAKLY_CLASSICAL_PRIME <=> WEAKLY_SEMIPRIME and WC1A");
  if (profile.cyclic && h(PredicateId::weakly_1abs_submodule) != h(PredicateId::wc1a))
    out.push_back("cyclic: WEAKLY_1ABS_SUBMODULE <=> WC1A");
  return out;
}

}  // namespace plab
