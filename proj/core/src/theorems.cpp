#include "plab/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

namespace plab {

using nlohmann::json;

const char* to_string(CheckMode m) noexcept {
  switch (m) {
    case CheckMode::exhaustive: return "exhaustive";
    case CheckMode::conditional: return "conditional";
    case CheckMode::miner: return "miner";
  }
  return "?";
}

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::verified: return "verified";
    case CheckStatus::counterexample: return "counterexample";
    case CheckStatus::skipped_no_instances: return "skipped_no_instances";
  }
  return "?";
}

bool SuiteReport::any_counterexample() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.status == CheckStatus::counterexample; });
}

const CheckReport* SuiteReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> reg = {
      {"T01", "theo1-forward", CheckMode::exhaustive},
      {"T02", "theo1-converse", CheckMode::exhaustive},
      {"T03", "text2", CheckMode::exhaustive},
      {"T04", "cext1", CheckMode::exhaustive},
      {"T05", "thom-preimage", CheckMode::exhaustive},
      {"T06", "thom-image", CheckMode::exhaustive},
      {"T07", "cfac", CheckMode::exhaustive},
      {"T08", "cfac2", CheckMode::exhaustive},
      {"T09", "tloc", CheckMode::exhaustive},
      {"T10", "pro1", CheckMode::exhaustive},
      {"T11", "pcyc", CheckMode::exhaustive},
      {"T12", "theo5", CheckMode::exhaustive},
      {"T13", "free-quadruple-corollary", CheckMode::exhaustive},
      {"T14", "tmain1", CheckMode::exhaustive},
      {"T15", "theo7", CheckMode::exhaustive},
      {"T16", "theo8", CheckMode::exhaustive},
      {"T17", "multiplication-proposition", CheckMode::exhaustive},
      {"T18", "tmain2", CheckMode::conditional},
      {"T19", "tmult", CheckMode::exhaustive},
      {"T20", "lemfaith", CheckMode::exhaustive},
      {"T21", "tcar1", CheckMode::exhaustive},
      {"T22", "pro7", CheckMode::exhaustive},
      {"T23", "tcar2", CheckMode::exhaustive},
      {"T24", "theo16-free", CheckMode::conditional},
      {"T25", "tfinal1", CheckMode::exhaustive},
      {"T26", "tfinal2", CheckMode::exhaustive},
      {"T27", "eda14", CheckMode::exhaustive},
  };
  return reg;
}

const CheckInfo* find_check(const std::string& id) {
  for (const auto& c : check_registry())
    if (c.id == id) return &c;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Workspace

namespace {

/// Quotient data for one module: for every pair L <= N of lattice members
/// with N proper, whether N/L is WC1A in M/L.
struct QuotientRow {
  std::size_t l, n;
  bool wc1a;
};

bool wc1a(const ContextPtr& ctx, const Submodule& n) {
  return SubmoduleAnalyzer(ctx, n).check(PredicateId::wc1a).holds;
}

std::string elem_list(const FiniteModule& m, const std::vector<Elem>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + m.label(v[i]);
  return out;
}

}  // namespace

struct Workspace::Memo {
  struct Slot {
    std::once_flag wc1a_once, index_once, quot_once, profile_once;
    std::vector<char> wc1a;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
    std::vector<QuotientRow> quot;
    std::vector<std::string> quot_skipped;
    ModuleProfile profile;
    std::optional<MultProfile> mult;
  };
  std::vector<std::unique_ptr<Slot>> slots;
};

Workspace::Workspace(Catalog catalog) : catalog_(std::move(catalog)), memo_(std::make_shared<Memo>()) {
  digest_ = catalog_digest(catalog_);
  const auto opts = catalog_.defaults.module_options();
  for (const auto& [id, spec] : catalog_.rings) {
    try {
      rings_.push_back(Ring{id, build_ring(spec, opts.ring)});
    } catch (const Error& e) {
      build_errors_.push_back("ring " + id + ": " + e.what());
    }
  }
  for (const auto& [id, spec] : catalog_.modules) {
    Module m;
    m.id = id;
    try {
      m.module = build_module(spec, opts);
      m.ctx = std::make_shared<const ModuleContext>(m.module);
    } catch (const Error& e) {
      build_errors_.push_back("module " + id + ": " + e.what());
      continue;
    }
    try {
      m.module->lattice();
      m.lattice = true;
    } catch (const CapExceeded& e) {
      m.lattice_skip = e.what();
    }
    modules_.push_back(std::move(m));
  }
  for (const auto& [id, sub] : catalog_.submodules) {
    auto it = std::find_if(modules_.begin(), modules_.end(), [&](const Module& m) { return m.id == sub.module; });
    if (it == modules_.end()) {
      build_errors_.push_back("submodule " + id + ": module " + sub.module + " was not built");
      continue;
    }
    try {
      std::vector<Elem> gens;
      for (const auto& t : sub.generators) gens.push_back(resolve_generator(*it->module, t));
      Submodule n = submodule_generated(*it->module, gens);
      it->named_ids.push_back(id);
      it->named.push_back(std::move(n));
    } catch (const Error& e) {
      build_errors_.push_back("submodule " + id + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < modules_.size(); ++i) memo_->slots.push_back(std::make_unique<Memo::Slot>());
}

const Workspace::Module* Workspace::module(const std::string& id) const {
  for (const auto& m : modules_)
    if (m.id == id) return &m;
  return nullptr;
}

std::vector<Submodule> Workspace::proper_instances(std::size_t i) const {
  const auto& m = modules_[i];
  std::vector<Submodule> out;
  if (m.lattice) {
    for (const auto& n : m.module->lattice())
      if (n.is_proper()) out.push_back(n);
  } else {
    for (const auto& n : m.named)
      if (n.is_proper()) out.push_back(n);
  }
  return out;
}

std::string Workspace::submodule_name(std::size_t i, const Submodule& n) const {
  const auto& m = modules_[i];
  for (std::size_t k = 0; k < m.named.size(); ++k)
    if (m.named[k] == n) return m.named_ids[k];
  return "<" + elem_list(*m.module, n.generators) + ">";
}

const std::vector<char>& Workspace::lattice_wc1a(std::size_t i) const {
  auto& slot = *memo_->slots[i];
  std::call_once(slot.wc1a_once, [&] {
    const auto& m = modules_[i];
    const auto& lat = m.module->lattice();
    slot.wc1a.assign(lat.size(), 0);
    for (std::size_t k = 0; k < lat.size(); ++k)
      if (lat[k].is_proper()) slot.wc1a[k] = wc1a(m.ctx, lat[k]);
  });
  return slot.wc1a;
}

std::size_t Workspace::lattice_index(std::size_t i, const ElementSet& members) const {
  auto& slot = *memo_->slots[i];
  std::call_once(slot.index_once, [&] {
    const auto& lat = modules_[i].module->lattice();
    for (std::size_t k = 0; k < lat.size(); ++k) slot.index.emplace(lat[k].members, k);
  });
  auto it = slot.index.find(members);
  if (it == slot.index.end()) throw Error("submodule not found in lattice of " + modules_[i].id);
  return it->second;
}

// ---------------------------------------------------------------------------
// Check helpers

namespace {

constexpr std::size_t kQuotientLatticeMax = 400;
constexpr std::size_t kPairLatticeMax = 400;
constexpr std::size_t kTmain2LatticeMax = 1000;
constexpr std::uint64_t kQuadrupleBudget = 200'000'000;

class Run {
 public:
  Run(const Workspace& ws, CheckReport& r) : ws(ws), r_(r) {}

  void instance(bool qualifying) {
    ++r_.instances_checked;
    if (qualifying) ++r_.qualifying;
  }
  void fail(std::string inst, std::string detail, std::vector<std::uint64_t> w = {}, std::string rendered = {}) {
    ++r_.counterexample_count;
    if (r_.counterexamples.size() < CheckReport::kMaxLogged)
      r_.counterexamples.push_back(Finding{std::move(inst), std::move(detail), std::move(w), std::move(rendered)});
  }
  void log(std::string inst, std::string detail, std::vector<std::uint64_t> w = {}, std::string rendered = {}) {
    ++r_.finding_count;
    if (r_.findings.size() < CheckReport::kMaxLogged)
      r_.findings.push_back(Finding{std::move(inst), std::move(detail), std::move(w), std::move(rendered)});
  }
  void skip(std::string why) { r_.skipped.push_back(std::move(why)); }

  std::string where(std::size_t i, const Submodule& n) const {
    return ws.modules()[i].id + " N=" + ws.submodule_name(i, n);
  }

  const Workspace& ws;

 private:
  CheckReport& r_;
};

std::vector<std::uint64_t> tuple_of(const Witness& w) {
  std::vector<std::uint64_t> out(w.scalars.begin(), w.scalars.end());
  if (w.element) out.push_back(*w.element);
  for (auto i : w.ideals) out.push_back(i);
  if (w.submodule) out.push_back(*w.submodule);
  return out;
}

const ModuleProfile& profile_of(const Workspace& ws, std::size_t i);

/// Weakly 1-absorbing primality of a colon ideal, following the scalar mode:
/// ring mode decides the ideal in R, integer mode decides its pullback dZ.
class ColonOracle {
 public:
  explicit ColonOracle(const FiniteModule& m) : m_(m) {}
  bool weakly(const ElementSet& colon) {
    auto it = memo_.find(colon);
    if (it != memo_.end()) return it->second;
    const Ideal i = ideal_from_members(m_.ring(), colon);
    const bool v = m_.mode() == ScalarMode::integer_image ? z_ideal_w1a(integer_generator(i))
                                                          : classify_ideal(m_.ring(), i).weakly_one_abs_prime;
    memo_.emplace(colon, v);
    return v;
  }

 private:
  const FiniteModule& m_;
  std::unordered_map<ElementSet, bool, ElementSetHash> memo_;
};

/// Whether every colon (N :_R m), m outside N, is weakly 1-absorbing prime.
bool all_colons_weakly(const SubmoduleAnalyzer& a, ColonOracle& oracle) {
  const auto& n = a.submodule();
  for (Elem m = 0; m < n.module->size(); ++m)
    if (!n.contains(m) && !oracle.weakly(a.colon(m))) return false;
  return true;
}

/// bad[t * |R| + c]: some k in K has t.c.k = 0, t.k outside N and c.k outside N.
std::vector<char> quadruple_table(const FiniteModule& mod, const Submodule& n, const Submodule& k) {
  const FiniteRing& r = mod.ring();
  const auto rs = r.size();
  std::vector<char> bad(rs * rs, 0);
  const auto ks = k.members.members();
  for (Elem t = 0; t < rs; ++t)
    for (Elem c = 0; c < rs; ++c) {
      const Elem tc = r.mul(t, c);
      for (Elem x : ks)
        if (mod.act(tc, x) == mod.zero() && !n.contains(mod.act(t, x)) && !n.contains(mod.act(c, x))) {
          bad[t * rs + c] = 1;
          break;
        }
    }
  return bad;
}

/// (N :_R K) for a submodule K with generators.
ElementSet colon_of(const SubmoduleAnalyzer& a, const Submodule& k) {
  ElementSet c = ElementSet::full(a.context().ring().size());
  for (Elem g : k.generators) c &= a.colon(g);
  return c;
}

bool ideal_kills(const FiniteModule& mod, const ElementSet& ideal, Elem m) {
  bool ok = true;
  ideal.for_each([&](Elem x) {
    if (ok && mod.act(x, m) != mod.zero()) ok = false;
  });
  return ok;
}

// T01 -------------------------------------------------------------------------
void check_t01(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    ColonOracle oracle(*e.module);
    for (const auto& n : ws.proper_instances(i)) {
      SubmoduleAnalyzer a(e.ctx, n);
      const bool hyp = all_colons_weakly(a, oracle);
      run.instance(hyp);
      if (!hyp) continue;
      const auto v = a.check(PredicateId::wc1a);
      if (!v.holds) run.fail(run.where(i, n), "all colons weakly 1-absorbing but WC1A fails", tuple_of(*v.witness));
    }
  }
}

// T02 -------------------------------------------------------------------------
void check_t02(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    const auto& mod = *e.module;
    const auto& torsion = profile_of(ws, i).torsion;
    std::vector<Elem> faithful_elems;
    for (Elem m = 0; m < mod.size(); ++m)
      if (!torsion.test(m)) faithful_elems.push_back(m);
    if (faithful_elems.empty()) continue;
    ColonOracle oracle(mod);
    for (const auto& n : ws.proper_instances(i)) {
      SubmoduleAnalyzer a(e.ctx, n);
      const bool w = a.check(PredicateId::wc1a).holds;
      for (Elem m : faithful_elems) {
        if (n.contains(m)) continue;
        run.instance(w);
        if (w && !oracle.weakly(a.colon(m)))
          run.fail(run.where(i, n), "WC1A with Ann(m)=0 but (N:m) not weakly 1-absorbing", {m}, "m=" + mod.label(m));
      }
    }
  }
}

// T03 -------------------------------------------------------------------------
void check_t03(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    const auto& prof = profile_of(ws, i);
    if (!prof.non_torsion) continue;
    ColonOracle oracle(*e.module);
    for (const auto& n : ws.proper_instances(i)) {
      if (!prof.torsion.is_subset_of(n.members)) continue;
      SubmoduleAnalyzer a(e.ctx, n);
      const bool lhs = a.check(PredicateId::wc1a).holds;
      const bool rhs = all_colons_weakly(a, oracle);
      run.instance(true);
      if (lhs != rhs)
        run.fail(run.where(i, n), std::string("WC1A=") + (lhs ? "true" : "false") + " but all colons weakly=" +
                                      (rhs ? "true" : "false"));
    }
  }
}

// T04 -------------------------------------------------------------------------
void check_t04(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    const auto& mod = *e.module;
    if (mod.spec().kind != ModuleKind::ring_as_module || mod.mode() != ScalarMode::ring) continue;
    for (const auto& n : ws.proper_instances(i)) {
      const bool lhs = wc1a(e.ctx, n);
      const bool rhs = classify_ideal(mod.ring(), ideal_from_members(mod.ring(), n.members)).weakly_one_abs_prime;
      run.instance(true);
      if (lhs != rhs) run.fail(run.where(i, n), "WC1A submodule and weakly 1-absorbing ideal disagree");
    }
  }
}

// T05 / T06 --------------------------------------------------------------------
void check_homs(Run& run, bool preimage) {
  const auto& ws = run.ws;
  const auto& mods = ws.modules();
  for (std::size_t i = 0; i < mods.size(); ++i) {
    if (!mods[i].lattice) continue;
    for (std::size_t j = 0; j < mods.size(); ++j) {
      if (!mods[j].lattice) continue;
      const auto& src = *mods[i].module;
      const auto& dst = *mods[j].module;
      if (!(src.ring().spec() == dst.ring().spec()) || src.mode() != dst.mode()) continue;
      std::vector<ModuleHom> homs;
      try {
        homs = enumerate_homs(src, dst, ws.catalog().defaults.hom_cap);
      } catch (const CapExceeded& e) {
        run.skip("homs " + mods[i].id + " -> " + mods[j].id + ": " + e.what());
        continue;
      }
      const auto& src_flags = ws.lattice_wc1a(i);
      const auto& dst_flags = ws.lattice_wc1a(j);
      const auto& src_lat = src.lattice();
      const auto& dst_lat = dst.lattice();
      for (std::size_t h = 0; h < homs.size(); ++h) {
        const auto& f = homs[h];
        const std::string tag = mods[i].id + " -> " + mods[j].id + " hom#" + std::to_string(h);
        if (preimage && f.mono) {
          for (std::size_t k = 0; k < dst_lat.size(); ++k) {
            if (!dst_lat[k].is_proper() || !dst_flags[k]) continue;
            const Submodule p = f.preimage_of(dst_lat[k]);
            if (!p.is_proper()) continue;
            run.instance(true);
            if (!src_flags[ws.lattice_index(i, p.members)])
              run.fail(tag + " N'=" + ws.submodule_name(j, dst_lat[k]), "preimage is not WC1A");
          }
        }
        if (!preimage && f.epi) {
          const Submodule ker = f.kernel();
          for (std::size_t k = 0; k < src_lat.size(); ++k) {
            if (!src_lat[k].is_proper() || !src_flags[k] || !ker.members.is_subset_of(src_lat[k].members)) continue;
            const Submodule img = f.image_of(src_lat[k]);
            run.instance(true);
            if (!img.is_proper() || !dst_flags[ws.lattice_index(j, img.members)])
              run.fail(tag + " N=" + ws.submodule_name(i, src_lat[k]), "image is not WC1A");
          }
        }
      }
    }
  }
}

// T07 / T08 --------------------------------------------------------------------

const std::vector<QuotientRow>& quotient_rows(const Workspace& ws, std::size_t i, Workspace::Memo& memo,
                                              std::vector<std::string>& skipped) {
  auto& slot = *memo.slots[i];
  std::call_once(slot.quot_once, [&] {
    const auto& e = ws.modules()[i];
    const auto& lat = e.module->lattice();
    for (std::size_t l = 0; l < lat.size(); ++l) {
      if (!lat[l].is_proper()) continue;
      QuotientModule q;
      ContextPtr qctx;
      try {
        q = quotient_module(e.module, lat[l]);
        qctx = std::make_shared<const ModuleContext>(q.module);
      } catch (const Error& err) {
        slot.quot_skipped.push_back(e.id + " / " + ws.submodule_name(i, lat[l]) + ": " + err.what());
        continue;
      }
      for (std::size_t n = 0; n < lat.size(); ++n) {
        if (!lat[n].is_proper() || !lat[l].members.is_subset_of(lat[n].members)) continue;
        const Submodule img = q.projection.image_of(lat[n]);
        slot.quot.push_back(QuotientRow{l, n, wc1a(qctx, img)});
      }
    }
  });
  skipped.insert(skipped.end(), slot.quot_skipped.begin(), slot.quot_skipped.end());
  return slot.quot;
}

}  // namespace

// Friend-free access to the memo for checks living in this file.
struct WorkspaceAccess {
  static Workspace::Memo& memo(const Workspace& ws) { return *ws.memo_; }
};

namespace {

const ModuleProfile& profile_of(const Workspace& ws, std::size_t i) {
  auto& slot = *WorkspaceAccess::memo(ws).slots[i];
  std::call_once(slot.profile_once, [&] {
    const auto& m = *ws.modules()[i].module;
    slot.profile = module_profile(m);
    if (ws.modules()[i].lattice) slot.mult = multiplication_profile(m);
  });
  return slot.profile;
}

bool is_multiplication(const Workspace& ws, std::size_t i) {
  profile_of(ws, i);
  const auto& slot = *WorkspaceAccess::memo(ws).slots[i];
  return slot.mult && slot.mult->is_multiplication;
}

void check_quotients(Run& run, bool cfac2) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    if (!e.lattice) continue;
    const auto& lat = e.module->lattice();
    if (lat.size() > kQuotientLatticeMax) {
      run.skip(e.id + ": lattice of " + std::to_string(lat.size()) + " submodules exceeds the quotient sweep bound");
      continue;
    }
    std::vector<std::string> skipped;
    const auto& rows = quotient_rows(ws, i, WorkspaceAccess::memo(ws), skipped);
    for (auto& s : skipped) run.skip(std::move(s));
    const auto& flags = ws.lattice_wc1a(i);
    for (const auto& row : rows) {
      const std::string inst = e.id + " L=" + ws.submodule_name(i, lat[row.l]) + " N=" + ws.submodule_name(i, lat[row.n]);
      if (!cfac2) {
        const bool hyp = flags[row.n];
        run.instance(hyp);
        if (hyp && !row.wc1a) run.fail(inst, "N is WC1A but N/L is not WC1A in M/L");
      } else {
        const bool hyp = flags[row.l] && row.wc1a;
        run.instance(hyp);
        if (hyp && !flags[row.n]) run.fail(inst, "K and N/K are WC1A but N is not");
      }
    }
  }
}

// T09 -------------------------------------------------------------------------
void check_t09(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    if (e.module->mode() != ScalarMode::ring) continue;
    const FiniteRing& r = e.module->ring();
    std::set<std::vector<Elem>> seen;
    const auto subs = ws.proper_instances(i);
    for (Elem s = 0; s < r.size(); ++s) {
      const Elem gens[1] = {s};
      const ElementSet closure = multiplicative_closure(r, gens);
      if (closure.test(r.zero()) || !seen.insert(closure.members()).second) continue;
      LocalizedModule lm;
      ContextPtr lctx;
      try {
        lm = localize_module(e.module, gens);
        lctx = std::make_shared<const ModuleContext>(lm.module);
      } catch (const Error& err) {
        run.skip(e.id + " S=<" + r.label(s) + ">: " + err.what());
        continue;
      }
      for (const auto& n : subs) {
        SubmoduleAnalyzer a(e.ctx, n);
        const bool hyp = a.check(PredicateId::wc1a).holds && !a.module_colon().intersects(closure);
        run.instance(hyp);
        if (!hyp) continue;
        const Submodule ln = lm.localize(n);
        const std::string inst = run.where(i, n) + " S=<" + r.label(s) + ">";
        if (!ln.is_proper()) {
          run.fail(inst, "localized submodule is not proper");
          continue;
        }
        const auto v = SubmoduleAnalyzer(lctx, ln).check(PredicateId::wc1a);
        if (!v.holds) run.fail(inst, "S^-1 N is not WC1A in S^-1 M", tuple_of(*v.witness));
      }
    }
  }
}

// T10 / T11 --------------------------------------------------------------------
void check_t10(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    const bool reduced = profile_of(ws, i).reduced;
    for (const auto& n : ws.proper_instances(i)) {
      SubmoduleAnalyzer a(e.ctx, n);
      const bool w1 = a.check(PredicateId::weakly_1abs_submodule).holds;
      const bool wcp = a.check(PredicateId::weakly_classical_prime).holds;
      const bool wsp = a.check(PredicateId::weakly_semiprime).holds;
      const bool wc = a.check(PredicateId::wc1a).holds;
      run.instance(w1 || wcp || (reduced && wsp && wc));
      const auto inst = run.where(i, n);
      if (w1 && !wc) run.fail(inst, "part (1): weakly 1-absorbing prime submodule but not WC1A");
      if (wcp && !(wc && wsp)) run.fail(inst, "part (2): weakly classical prime but not WC1A and weakly semiprime");
      if (reduced && wcp != (wsp && wc)) run.fail(inst, "part (3): reduced module equivalence fails");
    }
  }
}

void check_t11(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    if (!profile_of(ws, i).cyclic) continue;
    for (const auto& n : ws.proper_instances(i)) {
      SubmoduleAnalyzer a(e.ctx, n);
      const bool w1 = a.check(PredicateId::weakly_1abs_submodule).holds;
      const bool wc = a.check(PredicateId::wc1a).holds;
      run.instance(true);
      if (w1 != wc) run.fail(run.where(i, n), "cyclic module: weakly 1-absorbing prime and WC1A disagree");
    }
  }
}

// T12 / T13 --------------------------------------------------------------------
void check_pairs(Run& run, bool corollary) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    if (!e.lattice) continue;
    const auto& lat = e.module->lattice();
    if (lat.size() > kPairLatticeMax) {
      run.skip(e.id + ": lattice of " + std::to_string(lat.size()) + " submodules exceeds the pair sweep bound");
      continue;
    }
    const auto& mod = *e.module;
    const auto& ctx = *e.ctx;
    const FiniteRing& r = mod.ring();
    const auto rs = r.size();
    const auto& dom = ctx.nonunits();
    const auto& flags = ws.lattice_wc1a(i);
    const auto& ideals = ctx.proper_ideals();
    // Elementwise products {ab : a in I, b in J}.
    std::vector<std::vector<Elem>> elem_prod;
    if (corollary) {
      for (const auto& x : ideals)
        for (const auto& y : ideals) {
          ElementSet s(rs);
          x.members.for_each([&](Elem a) { y.members.for_each([&](Elem b) { s.set(r.mul(a, b)); }); });
          elem_prod.push_back(s.members());
        }
    }
    for (std::size_t ni = 0; ni < lat.size(); ++ni) {
      if (!lat[ni].is_proper() || !flags[ni]) continue;
      const auto& n = lat[ni];
      SubmoduleAnalyzer a(e.ctx, n);
      for (std::size_t ki = 0; ki < lat.size(); ++ki) {
        const auto& k = lat[ki];
        const ElementSet q = colon_of(a, k);
        const auto bad = quadruple_table(mod, n, k);
        const std::string inst = run.where(i, n) + " K=" + ws.submodule_name(i, k);
        if (!corollary) {
          for (Elem p : dom.products())
            for (Elem c : dom.scalars()) {
              if (!q.test(r.mul(p, c))) continue;
              const bool free = !bad[p * rs + c];
              run.instance(free);
              if (free && !q.test(p) && !q.test(c)) {
                const auto f = dom.min_factor(p);
                run.fail(inst, "abcK in N without quadruple-zero but abK, cK not in N", {f[0], f[1], c});
              }
            }
        } else {
          const auto np = ideals.size();
          for (std::size_t x = 0; x < np; ++x)
            for (std::size_t y = 0; y < np; ++y)
              for (std::size_t z = 0; z < np; ++z) {
                if (!ctx.ideal_product3(x, y, z).is_subset_of(q)) continue;
                bool free = true;
                for (Elem t : elem_prod[x * np + y]) {
                  ideals[z].members.for_each([&](Elem c) {
                    if (bad[t * rs + c]) free = false;
                  });
                  if (!free) break;
                }
                run.instance(free);
                if (free && !ctx.ideal_product2(x, y).members.is_subset_of(q) && !ideals[z].members.is_subset_of(q))
                  run.fail(inst, "IJLK in N, quadruple-free, but IJK and LK not in N", {x, y, z});
              }
        }
      }
    }
  }
}

// T14 -------------------------------------------------------------------------
void check_t14(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    for (const auto& n : ws.proper_instances(i)) {
      SubmoduleAnalyzer a(e.ctx, n);
      const bool w = a.check(PredicateId::wc1a).holds;
      for (int k = 1; k <= 8; ++k) {
        const auto v = a.tmain1(k);
        run.instance(true);
        if (v.holds != w)
          run.fail(run.where(i, n),
                   "condition (" + std::to_string(k) + ")=" + (v.holds ? "true" : "false") + " but WC1A=" +
                       (w ? "true" : "false"),
                   v.witness ? tuple_of(*v.witness) : std::vector<std::uint64_t>{});
      }
    }
  }
}

// T15 / T16 --------------------------------------------------------------------

struct ColonPowers {
  ElementSet q1, q2, q3;
};

ColonPowers colon_powers(const SubmoduleAnalyzer& a) {
  const FiniteRing& r = a.context().ring();
  const Ideal q = ideal_from_members(r, a.module_colon());
  return {q.members, ideal_power(q, 2).members, ideal_power(q, 3).members};
}

void check_t15(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    const auto& mod = *e.module;
    const FiniteRing& r = mod.ring();
    const auto& d = e.ctx->nonunits().scalars();
    const auto subs = ws.proper_instances(i);
    const std::uint64_t cost = std::uint64_t{d.size()} * d.size() * d.size() * mod.size() * subs.size();
    if (cost > kQuadrupleBudget) {
      run.skip(e.id + ": quadruple-zero enumeration exceeds the scan budget");
      continue;
    }
    auto scaled = [&](Elem s, const ElementSet& ideal) {
      ElementSet out(r.size());
      ideal.for_each([&](Elem x) { out.set(r.mul(s, x)); });
      return out;
    };
    for (const auto& n : subs) {
      SubmoduleAnalyzer a(e.ctx, n);
      if (!a.check(PredicateId::wc1a).holds) continue;
      const auto cp = colon_powers(a);
      for (Elem m = 0; m < mod.size(); ++m) {
        if (n.contains(m)) continue;
        for (Elem x : d)
          for (Elem y : d) {
            const Elem ab = r.mul(x, y);
            if (n.contains(mod.act(ab, m))) continue;
            for (Elem c : d) {
              const Elem abc = r.mul(ab, c);
              if (mod.act(abc, m) != mod.zero() || n.contains(mod.act(c, m))) continue;
              run.instance(true);
              const std::vector<std::uint64_t> w{x, y, c, m};
              const auto inst = run.where(i, n);
              if (!n.members.is_subset_of(e.ctx->module_annihilated_by(abc))) run.fail(inst, "abcN != 0", w);
              if (!ideal_kills(mod, scaled(ab, cp.q1), m)) run.fail(inst, "ab(N:M)m != 0", w);
              const Elem cm = mod.act(c, m);
              if (n.contains(mod.act(x, cm)) || n.contains(mod.act(y, cm))) continue;
              const bool ok = ideal_kills(mod, scaled(r.mul(x, c), cp.q1), m) &&
                              ideal_kills(mod, scaled(r.mul(y, c), cp.q1), m) &&
                              ideal_kills(mod, scaled(x, cp.q2), m) && ideal_kills(mod, scaled(y, cp.q2), m) &&
                              ideal_kills(mod, scaled(c, cp.q2), m) && ideal_kills(mod, cp.q3, m);
              if (!ok) run.fail(inst, "part (2) annihilation fails", w);
            }
          }
      }
    }
  }
}

void check_t16(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    const auto& mod = *e.module;
    const FiniteRing& r = mod.ring();
    const auto& d = e.ctx->nonunits().scalars();
    const bool mult = is_multiplication(ws, i);
    for (const auto& n : ws.proper_instances(i)) {
      SubmoduleAnalyzer a(e.ctx, n);
      if (!a.check(PredicateId::wc1a).holds) continue;
      const auto c1a = a.check(PredicateId::c1a);
      if (c1a.holds) continue;
      const auto inst = run.where(i, n);
      const auto& w = *c1a.witness;
      // The C1A witness of a WC1A submodule has abcm = 0, so it is a quadruple-zero.
      if (!a.is_quadruple_zero(w.scalars[0], w.scalars[1], w.scalars[2], *w.element))
        run.fail(inst, "C1A witness is not a quadruple-zero", tuple_of(w));
      bool part2 = false;
      std::vector<std::uint64_t> found;
      for (Elem m = 0; m < mod.size() && !part2; ++m) {
        if (n.contains(m)) continue;
        for (Elem x : d) {
          for (Elem y : d)
            for (Elem c : d) {
              if (!a.is_quadruple_zero(x, y, c, m)) continue;
              const Elem cm = mod.act(c, m);
              if (!n.contains(mod.act(x, cm)) && !n.contains(mod.act(y, cm))) {
                part2 = true;
                found = {x, y, c, m};
                break;
              }
            }
          if (part2) break;
        }
      }
      run.instance(part2);
      if (!part2) continue;
      const auto cp = colon_powers(a);
      const Submodule q3n = ideal_times_submodule(ideal_from_members(r, cp.q3), n);
      if (!q3n.is_zero()) run.fail(inst, "(N:M)^3 N != 0", found);
      if (mult) {
        const Ideal q4 = ideal_power(ideal_from_members(r, cp.q1), 4);
        if (!ideal_times_submodule(q4, whole_module(mod)).is_zero()) run.fail(inst, "N^4 != 0", found);
      }
    }
  }
}

// T17 -------------------------------------------------------------------------

/// Distinct colon ideals (K :_R M) over proper submodules K, as ring element sets.
std::vector<ElementSet> proper_colon_ideals(const FiniteModule& mod) {
  std::set<std::vector<Elem>> seen;
  std::vector<ElementSet> out;
  const auto whole = whole_module(mod);
  for (const auto& k : mod.lattice()) {
    if (!k.is_proper()) continue;
    const auto c = colon_ring(k, whole).ideal.members;
    if (seen.insert(c.members()).second) out.push_back(c);
  }
  return out;
}

ElementSet set_product(const FiniteRing& r, const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> gens;
  a.for_each([&](Elem x) { b.for_each([&](Elem y) { gens.push_back(r.mul(x, y)); }); });
  return ideal_generated(r, gens).members;
}

void check_t17(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    if (!e.lattice || !is_multiplication(ws, i)) continue;
    const auto& mod = *e.module;
    const FiniteRing& r = mod.ring();
    const auto ids = proper_colon_ideals(mod);
    const auto k = ids.size();
    std::vector<ElementSet> p2(k * k), p3(k * k * k);
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        p2[x * k + y] = set_product(r, ids[x], ids[y]);
        for (std::size_t z = 0; z < k; ++z) p3[(x * k + y) * k + z] = set_product(r, p2[x * k + y], ids[z]);
      }
    for (const auto& n : ws.proper_instances(i)) {
      SubmoduleAnalyzer a(e.ctx, n);
      const auto wv = a.check(PredicateId::wc1a);
      const bool w = wv.holds;
      bool cond = true;
      std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> groups;
      for (Elem m = 0; m < mod.size() && cond; ++m) {
        if (n.contains(m)) continue;
        const auto& c = a.colon(m);
        const auto& z = mod.annihilator(m);
        if (!groups.emplace(c.members(), z.members()).second) continue;
        for (std::size_t x = 0; x < k && cond; ++x)
          for (std::size_t y = 0; y < k && cond; ++y)
            for (std::size_t t = 0; t < k && cond; ++t) {
              const auto& s = p3[(x * k + y) * k + t];
              if (s.is_subset_of(c) && !s.is_subset_of(z) && !p2[x * k + y].is_subset_of(c) && !ids[t].is_subset_of(c))
                cond = false;
            }
      }
      run.instance(true);
      if (cond && !w)
        run.fail(run.where(i, n), "product condition (2) holds but WC1A fails", tuple_of(*wv.witness),
                 render_witness(mod, PredicateId::wc1a, *wv.witness));
      if (!cond && w) run.fail(run.where(i, n), "WC1A holds but product condition (2) fails");
    }
  }
}

// T18 -------------------------------------------------------------------------
void check_t18(Run& run) {
  const auto& ws = run.ws;
  for (const auto& ring : ws.rings()) {
    std::string msg;
    if (!um_sanity_lemma(*ring.ring, &msg)) run.fail(ring.id, "um sanity lemma: " + msg);
  }
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    if (!e.lattice) {
      run.skip(e.id + ": no lattice (" + e.lattice_skip + ")");
      continue;
    }
    if (e.module->lattice().size() > kTmain2LatticeMax) {
      run.skip(e.id + ": lattice of " + std::to_string(e.module->lattice().size()) +
               " submodules exceeds the submodule-quantified sweep bound");
      continue;
    }
    for (const auto& n : ws.proper_instances(i)) {
      SubmoduleAnalyzer a(e.ctx, n);
      std::array<Verdict, 9> v;
      for (int k = 1; k <= 8; ++k) v[k] = a.tmain2(k);
      run.instance(true);
      const auto inst = run.where(i, n);
      for (int k = 2; k <= 7; ++k)
        if (v[k].holds && !v[k + 1].holds)
          run.fail(inst, "(" + std::to_string(k) + ") holds but (" + std::to_string(k + 1) + ") fails",
                   tuple_of(*v[k + 1].witness));
      if (v[8].holds && !v[1].holds) run.fail(inst, "(8) holds but (1) fails", tuple_of(*v[1].witness));
      if (v[1].holds && !v[2].holds)
        run.log(inst, "(1) holds but (2) fails (um-dependent direction)", tuple_of(*v[2].witness));
    }
  }
}

// T19 -------------------------------------------------------------------------

bool one_abs_prime_annihilator(const FiniteModule& mod) {
  const Ideal ann = module_annihilator(mod);
  if (mod.mode() == ScalarMode::integer_image) {
    // Z is not local, so its 1-absorbing prime ideals are its prime ideals.
    const auto d = integer_generator(ann);
    if (d == 0) return true;
    for (std::uint64_t p = 2; p * p <= d; ++p)
      if (d % p == 0) return false;
    return d >= 2;
  }
  return ann.is_proper() && classify_ideal(mod.ring(), ann).one_abs_prime;
}

void check_t19(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    if (!e.lattice || !is_multiplication(ws, i)) continue;
    const auto& mod = *e.module;
    if (!one_abs_prime_annihilator(mod)) continue;
    const FiniteRing& r = mod.ring();
    const bool integer = mod.mode() == ScalarMode::integer_image;
    const Ideal ann = module_annihilator(mod);
    const Submodule whole = whole_module(mod);
    auto ids = proper_colon_ideals(mod);
    const auto k = ids.size();
    auto ids_all = ids;
    ids_all.push_back(ElementSet::full(r.size()));
    // Candidate ideals P for condition (4), with P.M.
    std::vector<Submodule> pm;
    if (integer) {
      const auto n = r.size();
      for (Elem p = 2; p <= n; ++p)
        if (n % p == 0 && z_ideal_w1a(p)) {
          const Elem g[1] = {static_cast<Elem>(p % n)};
          pm.push_back(ideal_times_submodule(ideal_generated(r, g), whole));
        }
    } else {
      for (const auto& p : r.ideals())
        if (p.is_proper() && ann.members.is_subset_of(p.members) && classify_ideal(r, p).weakly_one_abs_prime)
          pm.push_back(ideal_times_submodule(p, whole));
    }
    ColonOracle oracle(mod);
    for (const auto& n : ws.proper_instances(i)) {
      SubmoduleAnalyzer a(e.ctx, n);
      const bool c1 = a.check(PredicateId::wc1a).holds;
      const auto& c = a.module_colon();
      bool c2 = true;
      for (std::size_t x = 0; x < k && c2; ++x)
        for (std::size_t y = 0; y < k && c2; ++y) {
          const auto xy = set_product(r, ids[x], ids[y]);
          for (std::size_t z = 0; z < k && c2; ++z) {
            const auto xyz = set_product(r, xy, ids[z]);
            for (const auto& l : ids_all) {
              const auto all4 = set_product(r, xyz, l);
              if (!all4.is_subset_of(c) || all4.is_subset_of(ann.members)) continue;
              if (set_product(r, xy, l).is_subset_of(c) || set_product(r, ids[z], l).is_subset_of(c)) continue;
              c2 = false;
              break;
            }
          }
        }
      const bool c3 = oracle.weakly(c);
      const bool c4 = std::any_of(pm.begin(), pm.end(), [&](const Submodule& s) { return s == n; });
      run.instance(true);
      if (c1 != c2 || c1 != c3 || c1 != c4)
        run.fail(run.where(i, n), std::string("(1)..(4) = ") + (c1 ? "T" : "F") + (c2 ? "T" : "F") + (c3 ? "T" : "F") +
                                      (c4 ? "T" : "F"));
    }
  }
}

// T20 -------------------------------------------------------------------------
void check_t20(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    if (!profile_of(ws, i).faithful) continue;
    ColonOracle oracle(*e.module);
    for (const auto& n : ws.proper_instances(i)) {
      SubmoduleAnalyzer a(e.ctx, n);
      const bool w = a.check(PredicateId::wc1a).holds;
      run.instance(w);
      if (w && !oracle.weakly(a.module_colon())) {
        const auto wit = classify_ideal(e.module->ring(), ideal_from_members(e.module->ring(), a.module_colon()))
                             .weakly_one_abs_witness;
        std::vector<std::uint64_t> t;
        if (wit) t = {(*wit)[0], (*wit)[1], (*wit)[2]};
        run.fail(run.where(i, n), "faithful module, N WC1A, (N:M) not weakly 1-absorbing prime", t);
      }
    }
  }
}

// T21 / T22 / T23 --------------------------------------------------------------

struct Factors {
  ModulePtr m1, m2;
  ContextPtr c1, c2;
};

std::optional<Factors> two_factors(const Workspace::Module& e, bool over_product_ring) {
  const auto& spec = e.module->spec();
  const bool ok = over_product_ring
                      ? spec.kind == ModuleKind::product && spec.over_product_ring && spec.factors.size() == 2
                      : ((spec.kind == ModuleKind::product && !spec.over_product_ring && spec.factors.size() == 2) ||
                         (spec.kind == ModuleKind::free && spec.rank == 2));
  if (!ok || e.module->components().size() != 2) return std::nullopt;
  Factors f{e.module->components()[0], e.module->components()[1], nullptr, nullptr};
  f.c1 = std::make_shared<const ModuleContext>(f.m1);
  f.c2 = std::make_shared<const ModuleContext>(f.m2);
  return f;
}

bool factor_lattices(Run& run, const Workspace::Module& e, const Factors& f) {
  if (!f.m1->lattice_available() || !f.m2->lattice_available()) {
    run.skip(e.id + ": factor lattice unavailable");
    return false;
  }
  return true;
}

void check_t21(Run& run) {
  const auto& ws = run.ws;
  for (const auto& e : ws.modules()) {
    auto f = two_factors(e, false);
    if (!f || !factor_lattices(run, e, *f)) continue;
    const auto& m1 = *f->m1;
    const FiniteRing& r = m1.ring();
    const auto ann2 = module_annihilator(*f->m2).members;
    const auto& dom = f->c1->nonunits();
    for (const auto& n1 : m1.lattice()) {
      if (!n1.is_proper()) continue;
      const Submodule parts[2] = {n1, whole_module(*f->m2)};
      const Submodule n = product_submodule(*e.module, parts);
      const bool lhs = wc1a(e.ctx, n);
      SubmoduleAnalyzer a1(f->c1, n1);
      bool rhs = a1.check(PredicateId::wc1a).holds;
      for (Elem m = 0; m < m1.size() && rhs; ++m) {
        if (n1.contains(m)) continue;
        for (Elem p : dom.products()) {
          for (Elem c : dom.scalars()) {
            const Elem pc = r.mul(p, c);
            if (m1.act(pc, m) == m1.zero() && !n1.contains(m1.act(p, m)) && !n1.contains(m1.act(c, m)) &&
                !ann2.test(pc)) {
              rhs = false;
              break;
            }
          }
          if (!rhs) break;
        }
      }
      run.instance(true);
      if (lhs != rhs)
        run.fail(e.id + " N1=<" + elem_list(m1, n1.generators) + ">",
                 std::string("N1 x M2 WC1A=") + (lhs ? "true" : "false") + " but condition (2)=" + (rhs ? "true" : "false"));
    }
  }
}

void check_t22(Run& run) {
  const auto& ws = run.ws;
  for (const auto& e : ws.modules()) {
    auto f = two_factors(e, false);
    if (!f || !factor_lattices(run, e, *f)) continue;
    for (const auto& n1 : f->m1->lattice()) {
      if (!n1.is_proper()) continue;
      const bool w1 = wc1a(f->c1, n1);
      for (const auto& n2 : f->m2->lattice()) {
        if (!n2.is_proper()) continue;
        const Submodule parts[2] = {n1, n2};
        const bool w = wc1a(e.ctx, product_submodule(*e.module, parts));
        run.instance(w);
        if (w && !(w1 && wc1a(f->c2, n2)))
          run.fail(e.id + " N1=<" + elem_list(*f->m1, n1.generators) + "> N2=<" + elem_list(*f->m2, n2.generators) + ">",
                   "N1 x N2 WC1A but a factor is not");
      }
    }
  }
}

bool has_nonzero_nonunit(const FiniteRing& r) {
  return std::any_of(r.nonunits().begin(), r.nonunits().end(), [&](Elem x) { return x != r.zero(); });
}

void check_t23(Run& run) {
  const auto& ws = run.ws;
  for (const auto& e : ws.modules()) {
    auto f = two_factors(e, true);
    if (!f || !factor_lattices(run, e, *f)) continue;
    bool qualifies = true;
    for (const auto& m : {f->m1, f->m2}) {
      qualifies = qualifies && module_profile(*m).faithful && multiplication_profile(*m).is_multiplication &&
                  has_nonzero_nonunit(m->ring());
    }
    if (!qualifies) {
      run.skip(e.id + ": factors are not faithful multiplication modules over non-fields");
      continue;
    }
    for (const auto& n1 : f->m1->lattice())
      for (const auto& n2 : f->m2->lattice()) {
        const Submodule parts[2] = {n1, n2};
        const Submodule n = product_submodule(*e.module, parts);
        if (!n.is_proper() || n.is_zero()) continue;
        SubmoduleAnalyzer a(e.ctx, n);
        const bool c1 = a.check(PredicateId::wc1a).holds;
        const bool c2 = (!n2.is_proper() && n1.is_proper() &&
                         check_predicate(n1, PredicateId::classical_prime).holds) ||
                        (!n1.is_proper() && n2.is_proper() && check_predicate(n2, PredicateId::classical_prime).holds);
        const bool c3 = a.check(PredicateId::classical_prime).holds;
        const bool c4 = a.check(PredicateId::weakly_classical_prime).holds;
        run.instance(true);
        if (c1 != c2 || c1 != c3 || c1 != c4)
          run.fail(e.id + " N=<" + elem_list(*e.module, n.generators) + ">",
                   std::string("(1)..(4) = ") + (c1 ? "T" : "F") + (c2 ? "T" : "F") + (c3 ? "T" : "F") + (c4 ? "T" : "F"));
      }
  }
}

// T24 -------------------------------------------------------------------------
void check_t24(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    const auto& mod = *e.module;
    if (mod.size() * mod.size() > ws.catalog().defaults.module_cap) {
      run.skip(e.id + ": M^2 exceeds module_cap");
      continue;
    }
    const auto subs = ws.proper_instances(i);
    if (subs.empty()) continue;
    // M^2 with the colon identity asserted once by tensor_free, then reused.
    const TensorFree t0 = tensor_free(e.module, 2, subs.front());
    const auto tctx = std::make_shared<const ModuleContext>(t0.module);
    for (const auto& n : subs) {
      const Submodule parts[2] = {n, n};
      const Submodule nk = product_submodule(*t0.module, parts);
      SubmoduleAnalyzer a(e.ctx, n), ak(tctx, nk);
      for (Elem s = 0; s < mod.ring().size(); ++s) {
        const Submodule cc[2] = {colon_module(n, s), colon_module(n, s)};
        if (!(product_submodule(*t0.module, cc).members == ak.module_colon_by(s)))
          run.fail(run.where(i, n), "colon identity fails for scalar " + mod.ring().label(s), {s});
      }
      const bool w = a.check(PredicateId::wc1a).holds;
      const auto vk = ak.check(PredicateId::wc1a);
      run.instance(true);
      if (vk.holds && !w) run.fail(run.where(i, n), "N^2 WC1A but N not WC1A");
      if (w && !vk.holds) run.log(run.where(i, n), "N WC1A but N^2 not WC1A (um-dependent direction)", tuple_of(*vk.witness));
    }
  }
}

// T25 / T26 / T27 --------------------------------------------------------------

bool all_proper_wc1a(const Workspace& ws, std::size_t i) {
  const auto& flags = ws.lattice_wc1a(i);
  const auto& lat = ws.modules()[i].module->lattice();
  for (std::size_t k = 0; k < lat.size(); ++k)
    if (lat[k].is_proper() && !flags[k]) return false;
  return true;
}

void check_t25(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    if (e.module->mode() != ScalarMode::ring) continue;
    if (!e.lattice) {
      run.skip(e.id + ": no lattice");
      continue;
    }
    const bool hyp = all_proper_wc1a(ws, i);
    run.instance(hyp);
    if (!hyp) continue;
    const Ideal j3 = ideal_power(jacobson_radical(e.module->ring()), 3);
    if (!ideal_times_submodule(j3, whole_module(*e.module)).is_zero()) run.fail(e.id, "Jac(R)^3 M != 0");
  }
}

void check_t26(Run& run) {
  const auto& ws = run.ws;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    const FiniteRing& r = e.module->ring();
    if (e.module->mode() != ScalarMode::ring || !r.is_local()) continue;
    if (!e.lattice) {
      run.skip(e.id + ": no lattice");
      continue;
    }
    const bool lhs = all_proper_wc1a(ws, i);
    const Ideal m3 = ideal_power(r.maximal_ideals().front(), 3);
    const bool rhs = ideal_times_submodule(m3, whole_module(*e.module)).is_zero();
    run.instance(true);
    if (lhs != rhs)
      run.fail(e.id, std::string("all proper WC1A=") + (lhs ? "true" : "false") + " but m^3 M = 0 is " +
                         (rhs ? "true" : "false"));
  }
}

void check_t27(Run& run) {
  for (const auto& ring : run.ws.rings()) {
    const auto lhs = every_proper_ideal_w1a(*ring.ring);
    const bool rhs = local_cube_zero_or_two_fields(*ring.ring);
    run.instance(true);
    if (lhs.holds != rhs) {
      std::vector<std::uint64_t> w;
      if (lhs.witness_triple) w = {(*lhs.witness_triple)[0], (*lhs.witness_triple)[1], (*lhs.witness_triple)[2]};
      run.fail(ring.id, std::string("every proper ideal weakly 1-absorbing=") + (lhs.holds ? "true" : "false") +
                            " but structural test=" + (rhs ? "true" : "false"),
               w);
    }
  }
}

using CheckFn = std::function<void(Run&)>;

const std::map<std::string, CheckFn>& check_functions() {
  static const std::map<std::string, CheckFn> fns = {
      {"T01", check_t01},
      {"T02", check_t02},
      {"T03", check_t03},
      {"T04", check_t04},
      {"T05", [](Run& r) { check_homs(r, true); }},
      {"T06", [](Run& r) { check_homs(r, false); }},
      {"T07", [](Run& r) { check_quotients(r, false); }},
      {"T08", [](Run& r) { check_quotients(r, true); }},
      {"T09", check_t09},
      {"T10", check_t10},
      {"T11", check_t11},
      {"T12", [](Run& r) { check_pairs(r, false); }},
      {"T13", [](Run& r) { check_pairs(r, true); }},
      {"T14", check_t14},
      {"T15", check_t15},
      {"T16", check_t16},
      {"T17", check_t17},
      {"T18", check_t18},
      {"T19", check_t19},
      {"T20", check_t20},
      {"T21", check_t21},
      {"T22", check_t22},
      {"T23", check_t23},
      {"T24", check_t24},
      {"T25", check_t25},
      {"T26", check_t26},
      {"T27", check_t27},
  };
  return fns;
}

}  // namespace

CheckReport run_check(const std::string& id, const Workspace& ws) {
  const CheckInfo* info = find_check(id);
  if (!info) throw SpecError("unknown check id " + id);
  CheckReport rep;
  rep.id = info->id;
  rep.title = info->title;
  rep.mode = info->mode;
  const auto t0 = std::chrono::steady_clock::now();
  Run run(ws, rep);
  check_functions().at(id)(run);
  rep.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  if (rep.counterexample_count > 0)
    rep.status = CheckStatus::counterexample;
  else if (rep.qualifying == 0)
    rep.status = CheckStatus::skipped_no_instances;
  else
    rep.status = CheckStatus::verified;
  return rep;
}

SuiteReport run_suite(const Workspace& ws, const SuiteOptions& options) {
  std::vector<std::string> ids;
  if (options.selection) {
    ids = *options.selection;
  } else {
    ids = ws.catalog().defaults.suite;
    if (ids.empty())
      for (const auto& c : check_registry()) ids.push_back(c.id);
  }
  for (const auto& id : ids)
    if (!find_check(id)) throw SpecError("unknown check id " + id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  SuiteReport out;
  out.catalog_digest = ws.digest();
  out.checks.resize(ids.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= ids.size()) return;
      try {
        out.checks[k] = run_check(ids[k], ws);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(ids.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

json suite_to_json(const SuiteReport& r, bool include_runtime) {
  auto findings = [](const std::vector<Finding>& v) {
    json a = json::array();
    for (const auto& f : v)
      a.push_back({{"instance", f.instance}, {"detail", f.detail}, {"witness", f.witness}, {"rendered", f.rendered}});
    return a;
  };
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = {{"id", c.id},
              {"title", c.title},
              {"mode", to_string(c.mode)},
              {"status", to_string(c.status)},
              {"instances_checked", c.instances_checked},
              {"qualifying", c.qualifying},
              {"counterexample_count", c.counterexample_count},
              {"counterexamples", findings(c.counterexamples)},
              {"finding_count", c.finding_count},
              {"findings", findings(c.findings)},
              {"skipped", c.skipped}};
    if (include_runtime) j["runtime_ms"] = c.runtime_ms;
    checks.push_back(std::move(j));
  }
  return {{"schema_version", kSchemaVersion}, {"catalog_digest", r.catalog_digest}, {"checks", checks}};
}

// ---------------------------------------------------------------------------
// Miners

const std::vector<std::string>& mine_patterns() {
  static const std::vector<std::string> p = {"tmain2_converse", "theo16_converse", "wc1a_not_c1a", "wcp_not_cp"};
  return p;
}

namespace {

std::vector<RingSpec> mine_rings(std::size_t max_ring) {
  std::vector<std::pair<std::size_t, RingSpec>> out;
  for (std::uint32_t n = 2; n <= max_ring; ++n) out.emplace_back(n, RingSpec::zn(n));
  for (std::uint32_t a = 2; a * a <= max_ring; ++a)
    for (std::uint32_t b = a; a * b <= max_ring; ++b)
      out.emplace_back(a * b, RingSpec::product({RingSpec::zn(a), RingSpec::zn(b)}));
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint32_t v = 1;; ++v) {
      std::size_t size = 1;
      for (std::uint32_t k = 0; k <= v; ++k) size *= p;
      if (size > max_ring) break;
      out.emplace_back(size, RingSpec::trunc_poly(p, v));
    }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<RingSpec> specs;
  for (auto& [_, s] : out) specs.push_back(std::move(s));
  return specs;
}

std::vector<ModuleSpec> mine_modules(const RingSpec& r, std::size_t ring_size, std::size_t max_module) {
  std::vector<ModuleSpec> out;
  const bool zn = r.kind == RingKind::zn;
  if (ring_size <= max_module) {
    if (zn) out.push_back(ModuleSpec::ring_as_module(r, ScalarMode::integer_image));
    out.push_back(ModuleSpec::ring_as_module(r, ScalarMode::ring));
  }
  if (ring_size * ring_size <= max_module) {
    if (zn) out.push_back(ModuleSpec::free(r, 2, ScalarMode::integer_image));
    out.push_back(ModuleSpec::free(r, 2, ScalarMode::ring));
  }
  return out;
}

}  // namespace

std::vector<Finding> mine(const std::string& pattern, const MineBounds& bounds) {
  if (std::find(mine_patterns().begin(), mine_patterns().end(), pattern) == mine_patterns().end())
    throw SpecError("unknown mining pattern " + pattern);
  std::vector<Finding> out;
  if (bounds.limit == 0) return out;
  ModuleOptions opts;
  opts.module_cap = std::max<std::size_t>(opts.module_cap, bounds.max_module * bounds.max_module);
  for (const auto& rs : mine_rings(bounds.max_ring)) {
    const RingPtr ring = build_ring(rs, opts.ring);
    for (const auto& ms : mine_modules(rs, ring->size(), bounds.max_module)) {
      ModulePtr mod = build_module(ms, opts);
      if (!mod->lattice_available()) continue;
      const auto ctx = std::make_shared<const ModuleContext>(mod);
      ModulePtr sq;
      ContextPtr sq_ctx;
      if (pattern == "theo16_converse") {
        if (mod->size() * mod->size() > bounds.max_module) continue;
        const ModulePtr f[2] = {mod, mod};
        sq = direct_product(f);
        sq_ctx = std::make_shared<const ModuleContext>(sq);
      }
      for (const auto& n : mod->lattice()) {
        if (!n.is_proper()) continue;
        SubmoduleAnalyzer a(ctx, n);
        std::optional<Witness> w;
        std::string detail;
        if (pattern == "wc1a_not_c1a") {
          if (!a.check(PredicateId::wc1a).holds) continue;
          auto v = a.check(PredicateId::c1a);
          if (v.holds) continue;
          w = v.witness;
          detail = "WC1A holds, C1A fails";
        } else if (pattern == "wcp_not_cp") {
          if (!a.check(PredicateId::weakly_classical_prime).holds) continue;
          auto v = a.check(PredicateId::classical_prime);
          if (v.holds) continue;
          w = v.witness;
          detail = "weakly classical prime holds, classical prime fails";
        } else if (pattern == "tmain2_converse") {
          if (!a.check(PredicateId::wc1a).holds) continue;
          auto v = a.tmain2(2);
          if (v.holds) continue;
          w = v.witness;
          detail = "WC1A holds, tmain2 condition (2) fails";
        } else {
          if (!a.check(PredicateId::wc1a).holds) continue;
          const Submodule parts[2] = {n, n};
          auto v = SubmoduleAnalyzer(sq_ctx, product_submodule(*sq, parts)).check(PredicateId::wc1a);
          if (v.holds) continue;
          w = v.witness;
          detail = "N WC1A, N^2 not WC1A in M^2";
        }
        std::vector<std::uint64_t> t = tuple_of(*w);
        std::string rendered;
        if (pattern == "wc1a_not_c1a") rendered = render_witness(*mod, PredicateId::c1a, *w);
        if (pattern == "wcp_not_cp") rendered = render_witness(*mod, PredicateId::classical_prime, *w);
        if (pattern == "theo16_converse") rendered = render_witness(*sq, PredicateId::wc1a, *w);
        out.push_back(Finding{mod->spec().describe() + " N=<" + elem_list(*mod, n.generators) + ">", detail, t, rendered});
        if (out.size() >= bounds.limit) return out;
      }
    }
  }
  return out;
}

bool um_sanity_lemma(const FiniteRing& r, std::string* message) {
  for (const auto& m : r.maximal_ideals()) {
    const auto field_mod = build_module(ModuleSpec::cyclic_quotient(r.spec(), m.generators, ScalarMode::ring));
    const ModulePtr f[2] = {field_mod, field_mod};
    const auto sq = direct_product(f);
    const auto q = field_mod->size();
    std::size_t lines = 0;
    ElementSet cover(sq->size());
    for (const auto& s : sq->lattice())
      if (s.size() == q) {
        ++lines;
        cover |= s.members;
      }
    if (lines != q + 1 || cover.count() != sq->size()) {
      if (message)
        *message = "maximal ideal <" + std::to_string(m.generators.empty() ? 0 : m.generators[0]) + ">: " +
                   std::to_string(lines) + " lines, cover " + std::to_string(cover.count()) + "/" +
                   std::to_string(sq->size());
      return false;
    }
  }
  return true;
}

}  // namespace plab
