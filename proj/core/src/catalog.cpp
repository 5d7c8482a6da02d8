#include "plab/catalog.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace plab {

using nlohmann::json;

extern const char* const kDefaultCatalogJson;

CatalogError::CatalogError(Kind kind, const std::string& what, std::size_t line, std::size_t column)
    : Error(std::string(to_string(kind)) + ": " + what), kind_(kind), line_(line), column_(column) {}

const char* to_string(CatalogError::Kind kind) noexcept {
  switch (kind) {
    case CatalogError::Kind::parse: return "parse";
    case CatalogError::Kind::schema: return "schema";
    case CatalogError::Kind::unresolved_reference: return "unresolved_reference";
    case CatalogError::Kind::cap_exceeded: return "cap_exceeded";
    case CatalogError::Kind::io: return "io";
  }
  return "?";
}

ModuleOptions CatalogDefaults::module_options() const {
  ModuleOptions o;
  o.module_cap = module_cap;
  o.lattice_cap = lattice_cap;
  o.lattice_module_max = lattice_module_max;
  o.hom_cap = hom_cap;
  o.ring.ring_cap = ring_cap;
  o.ring.ideal_cap = ideal_cap;
  return o;
}

bool operator==(const Catalog& a, const Catalog& b) {
  return a.rings == b.rings && a.modules == b.modules && a.submodules == b.submodules && a.defaults == b.defaults;
}

namespace {

using Kind = CatalogError::Kind;

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw CatalogError(Kind::schema, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint32_t as_u32(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 0xFFFFFFFFll)
    schema(where, "expected a nonnegative integer");
  return v.get<std::uint32_t>();
}

std::size_t as_size(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) schema(where, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<Elem> as_elems(const json& v, const std::string& where) {
  if (!v.is_array()) schema(where, "expected an array of integers");
  std::vector<Elem> out;
  for (const auto& e : v) out.push_back(as_u32(e, where));
  return out;
}

ScalarMode as_mode(const json& obj, const std::string& where) {
  auto it = obj.find("scalar_mode");
  if (it == obj.end()) return ScalarMode::ring;
  if (*it == "ring") return ScalarMode::ring;
  if (*it == "integer_image") return ScalarMode::integer_image;
  schema(where, "scalar_mode must be \"ring\" or \"integer_image\"");
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class Parser {
 public:
  explicit Parser(const json& root) : root_(root) {}

  Catalog run() {
    if (!root_.is_object()) schema("catalog", "top level must be an object");
    for (const auto& [k, v] : root_.items())
      if (k != "rings" && k != "modules" && k != "submodules" && k != "defaults")
        schema("catalog", "unknown top-level key \"" + k + "\"");
    if (auto it = root_.find("defaults"); it != root_.end()) parse_defaults(*it);
    for (const char* key : {"rings", "modules", "submodules"})
      if (root_.contains(key) && !root_[key].is_object()) schema(key, "must be an object keyed by id");
    if (root_.contains("rings"))
      for (const auto& [id, _] : root_["rings"].items()) ring_by_id(id);
    if (root_.contains("modules"))
      for (const auto& [id, _] : root_["modules"].items()) module_by_id(id);
    if (root_.contains("submodules"))
      for (const auto& [id, v] : root_["submodules"].items()) parse_submodule(id, v);
    return std::move(cat_);
  }

 private:
  void parse_defaults(const json& d) {
    const std::string w = "defaults";
    if (!d.is_object()) schema(w, "must be an object");
    auto& o = cat_.defaults;
    for (const auto& [k, v] : d.items()) {
      if (k == "ring_cap") o.ring_cap = as_size(v, w + "." + k);
      else if (k == "ideal_cap") o.ideal_cap = as_size(v, w + "." + k);
      else if (k == "module_cap") o.module_cap = as_size(v, w + "." + k);
      else if (k == "lattice_cap") o.lattice_cap = as_size(v, w + "." + k);
      else if (k == "lattice_module_max") o.lattice_module_max = as_size(v, w + "." + k);
      else if (k == "hom_cap") o.hom_cap = as_size(v, w + "." + k);
      else if (k == "quadruple_zero_limit") o.quadruple_zero_limit = as_size(v, w + "." + k);
      else if (k == "suite") {
        if (!v.is_array()) schema(w + ".suite", "expected an array of check ids");
        for (const auto& s : v) {
          if (!s.is_string()) schema(w + ".suite", "expected strings");
          o.suite.push_back(s.get<std::string>());
        }
      } else {
        schema(w, "unknown key \"" + k + "\"");
      }
    }
  }

  const RingSpec& ring_by_id(const std::string& id) {
    if (auto it = cat_.rings.find(id); it != cat_.rings.end()) return it->second;
    if (!root_.contains("rings") || !root_["rings"].contains(id))
      throw CatalogError(Kind::unresolved_reference, "unknown ring id \"" + id + "\"");
    if (std::find(ring_stack_.begin(), ring_stack_.end(), id) != ring_stack_.end())
      schema("rings." + id, "cyclic reference");
    ring_stack_.push_back(id);
    RingSpec spec = ring_spec(root_["rings"][id], "rings." + id);
    ring_stack_.pop_back();
    check_ring_size(spec, "rings." + id);
    return cat_.rings.emplace(id, std::move(spec)).first->second;
  }

  RingSpec ring_ref(const json& v, const std::string& where) {
    if (v.is_string()) return ring_by_id(v.get<std::string>());
    return ring_spec(v, where);
  }

  RingSpec ring_spec(const json& v, const std::string& w) {
    if (!v.is_object()) schema(w, "ring spec must be an object or a ring id");
    const std::string kind = field(v, "kind", w).get<std::string>();
    if (kind == "zn") {
      const auto n = as_u32(field(v, "n", w), w + ".n");
      if (n < 2) schema(w, "zn needs n >= 2");
      return RingSpec::zn(n);
    }
    if (kind == "product") {
      const auto& f = field(v, "factors", w);
      if (!f.is_array() || f.size() < 2) schema(w, "product needs at least two factors");
      std::vector<RingSpec> factors;
      for (std::size_t i = 0; i < f.size(); ++i) factors.push_back(ring_ref(f[i], w + ".factors[" + std::to_string(i) + "]"));
      return RingSpec::product(std::move(factors));
    }
    if (kind == "trunc_poly") {
      const auto p = as_u32(field(v, "p", w), w + ".p");
      const auto vars = as_u32(field(v, "vars", w), w + ".vars");
      if (!is_prime(p)) schema(w, "trunc_poly needs a prime p, got " + std::to_string(p));
      if (vars < 1) schema(w, "trunc_poly needs vars >= 1");
      return RingSpec::trunc_poly(p, vars);
    }
    if (kind == "localization") {
      RingSpec base = ring_ref(field(v, "base", w), w + ".base");
      return RingSpec::localization(std::move(base), as_elems(field(v, "mult_set_generators", w), w));
    }
    schema(w, "unknown ring kind \"" + kind + "\"");
  }

  void check_ring_size(const RingSpec& spec, const std::string& w) {
    try {
      RingOptions o;
      o.ring_cap = cat_.defaults.ring_cap;
      o.ideal_cap = cat_.defaults.ideal_cap;
      ring_size_[spec.describe()] = build_ring(spec, o)->size();
    } catch (const CapExceeded& e) {
      throw CatalogError(Kind::cap_exceeded, w + ": " + e.what());
    } catch (const SpecError& e) {
      schema(w, e.what());
    }
  }

  std::size_t ring_size(const RingSpec& spec, const std::string& w) {
    auto it = ring_size_.find(spec.describe());
    if (it == ring_size_.end()) {
      check_ring_size(spec, w);
      it = ring_size_.find(spec.describe());
    }
    return it->second;
  }

  const ModuleSpec& module_by_id(const std::string& id) {
    if (auto it = cat_.modules.find(id); it != cat_.modules.end()) return it->second;
    if (!root_.contains("modules") || !root_["modules"].contains(id))
      throw CatalogError(Kind::unresolved_reference, "unknown module id \"" + id + "\"");
    if (std::find(module_stack_.begin(), module_stack_.end(), id) != module_stack_.end())
      schema("modules." + id, "cyclic reference");
    module_stack_.push_back(id);
    ModuleSpec spec = module_spec(root_["modules"][id], "modules." + id);
    module_stack_.pop_back();
    return cat_.modules.emplace(id, std::move(spec)).first->second;
  }

  ModuleSpec module_ref(const json& v, const std::string& where) {
    if (v.is_string()) return module_by_id(v.get<std::string>());
    return module_spec(v, where);
  }

  ModuleSpec module_spec(const json& v, const std::string& w) {
    if (!v.is_object()) schema(w, "module spec must be an object or a module id");
    const std::string kind = field(v, "kind", w).get<std::string>();
    ModuleSpec spec;
    if (kind == "ring_as_module") {
      spec = ModuleSpec::ring_as_module(ring_ref(field(v, "ring", w), w + ".ring"), as_mode(v, w));
    } else if (kind == "free") {
      const auto rank = as_u32(field(v, "rank", w), w + ".rank");
      if (rank < 1) schema(w, "free needs rank >= 1");
      spec = ModuleSpec::free(ring_ref(field(v, "ring", w), w + ".ring"), rank, as_mode(v, w));
    } else if (kind == "cyclic_quotient") {
      spec = ModuleSpec::cyclic_quotient(ring_ref(field(v, "ring", w), w + ".ring"),
                                         as_elems(field(v, "ideal_generators", w), w), as_mode(v, w));
    } else if (kind == "product") {
      const auto& f = field(v, "factors", w);
      if (!f.is_array() || f.size() < 2) schema(w, "product needs at least two factors");
      std::vector<ModuleSpec> factors;
      for (std::size_t i = 0; i < f.size(); ++i)
        factors.push_back(module_ref(f[i], w + ".factors[" + std::to_string(i) + "]"));
      const bool over = v.value("over_product_ring", false);
      spec = ModuleSpec::product(std::move(factors), over);
    } else if (kind == "quotient") {
      ModuleSpec base = module_ref(field(v, "base", w), w + ".base");
      const auto& k = field(v, "kernel_generators", w);
      if (!k.is_array()) schema(w, "kernel_generators must be an array");
      std::vector<Elem> gens;
      ModulePtr built;
      for (const auto& g : k) {
        if (g.is_array()) {
          if (!built) built = build_checked(base, w + ".base");
          gens.push_back(resolve_generator(*built, as_elems(g, w)));
        } else {
          gens.push_back(as_u32(g, w + ".kernel_generators"));
        }
      }
      spec = ModuleSpec::quotient(std::move(base), std::move(gens));
    } else if (kind == "localization") {
      ModuleSpec base = module_ref(field(v, "base", w), w + ".base");
      spec = ModuleSpec::localization(std::move(base), as_elems(field(v, "mult_set_generators", w), w));
    } else {
      schema(w, "unknown module kind \"" + kind + "\"");
    }
    if (spec.scalar_mode == ScalarMode::integer_image && spec.ring.kind != RingKind::zn)
      schema(w, "integer_image scalar mode needs a zn ring");
    const auto bound = size_bound(spec, w);
    if (bound > cat_.defaults.module_cap)
      throw CatalogError(Kind::cap_exceeded, w + ": module size bound " + std::to_string(bound) +
                                                 " exceeds module_cap " + std::to_string(cat_.defaults.module_cap));
    return spec;
  }

  // Upper bound on the module size, saturating just past the cap.
  std::size_t size_bound(const ModuleSpec& s, const std::string& w) {
    const std::size_t sat = cat_.defaults.module_cap + 1;
    auto mul = [&](std::size_t a, std::size_t b) { return (b != 0 && a > sat / b) ? sat : std::min(sat, a * b); };
    switch (s.kind) {
      case ModuleKind::ring_as_module:
      case ModuleKind::cyclic_quotient:
        return ring_size(s.ring, w);
      case ModuleKind::free: {
        std::size_t out = 1;
        for (std::uint32_t i = 0; i < s.rank; ++i) out = mul(out, ring_size(s.ring, w));
        return out;
      }
      case ModuleKind::product: {
        std::size_t out = 1;
        for (const auto& f : s.factors) out = mul(out, size_bound(f, w));
        return out;
      }
      case ModuleKind::quotient:
      case ModuleKind::localization:
        return size_bound(*s.base, w);
    }
    return sat;
  }

  ModulePtr build_checked(const ModuleSpec& spec, const std::string& w) {
    try {
      return build_module(spec, cat_.defaults.module_options());
    } catch (const CapExceeded& e) {
      throw CatalogError(Kind::cap_exceeded, w + ": " + e.what());
    } catch (const Error& e) {
      schema(w, e.what());
    }
  }

  void parse_submodule(const std::string& id, const json& v) {
    const std::string w = "submodules." + id;
    if (!v.is_object()) schema(w, "must be an object");
    CatalogSubmodule sub;
    const auto& mod = field(v, "module", w);
    if (!mod.is_string()) schema(w, "module must be a module id");
    sub.module = mod.get<std::string>();
    if (!cat_.modules.count(sub.module))
      throw CatalogError(Kind::unresolved_reference, w + ": unknown module id \"" + sub.module + "\"");
    const auto& g = field(v, "generators", w);
    if (!g.is_array()) schema(w, "generators must be an array");
    for (const auto& e : g) sub.generators.push_back(e.is_array() ? as_elems(e, w) : std::vector<Elem>{as_u32(e, w)});
    cat_.submodules.emplace(id, std::move(sub));
  }

  const json& root_;
  Catalog cat_;
  std::vector<std::string> ring_stack_, module_stack_;
  std::map<std::string, std::size_t> ring_size_;
};

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Writer ----------------------------------------------------------------------

json ring_json(const RingSpec& s, const Catalog& c, bool allow_ref) {
  if (allow_ref)
    for (const auto& [id, r] : c.rings)
      if (r == s) return id;
  json j;
  switch (s.kind) {
    case RingKind::zn:
      j = {{"kind", "zn"}, {"n", s.n}};
      break;
    case RingKind::product: {
      json f = json::array();
      for (const auto& x : s.factors) f.push_back(ring_json(x, c, true));
      j = {{"kind", "product"}, {"factors", f}};
      break;
    }
    case RingKind::trunc_poly:
      j = {{"kind", "trunc_poly"}, {"p", s.p}, {"vars", s.vars}};
      break;
    case RingKind::localization:
      j = {{"kind", "localization"}, {"base", ring_json(*s.base, c, true)}, {"mult_set_generators", s.mult_set_generators}};
      break;
  }
  return j;
}

json module_json(const ModuleSpec& s, const Catalog& c, bool allow_ref) {
  if (allow_ref)
    for (const auto& [id, m] : c.modules)
      if (m == s) return id;
  json j;
  const char* mode = s.scalar_mode == ScalarMode::ring ? "ring" : "integer_image";
  switch (s.kind) {
    case ModuleKind::ring_as_module:
      j = {{"kind", "ring_as_module"}, {"ring", ring_json(s.ring, c, true)}, {"scalar_mode", mode}};
      break;
    case ModuleKind::free:
      j = {{"kind", "free"}, {"ring", ring_json(s.ring, c, true)}, {"rank", s.rank}, {"scalar_mode", mode}};
      break;
    case ModuleKind::cyclic_quotient:
      j = {{"kind", "cyclic_quotient"},
           {"ring", ring_json(s.ring, c, true)},
           {"ideal_generators", s.ideal_generators},
           {"scalar_mode", mode}};
      break;
    case ModuleKind::product: {
      json f = json::array();
      for (const auto& x : s.factors) f.push_back(module_json(x, c, true));
      j = {{"kind", "product"}, {"factors", f}, {"over_product_ring", s.over_product_ring}};
      break;
    }
    case ModuleKind::quotient:
      j = {{"kind", "quotient"}, {"base", module_json(*s.base, c, true)}, {"kernel_generators", s.kernel_generators}};
      break;
    case ModuleKind::localization:
      j = {{"kind", "localization"},
           {"base", module_json(*s.base, c, true)},
           {"mult_set_generators", s.mult_set_generators}};
      break;
  }
  return j;
}

std::string scalar_text(const FiniteModule& m, Elem r) {
  const FiniteRing& ring = m.ring();
  if (m.mode() == ScalarMode::integer_image) {
    // Zn elements are residues; 1 is represented by the nonunit integer n+1.
    return std::to_string(r == 1 ? ring.size() + 1 : std::size_t{r});
  }
  return ring.label(r);
}

std::string product_text(const FiniteModule& m, std::initializer_list<Elem> scalars, Elem e) {
  std::string out;
  for (Elem s : scalars) out += scalar_text(m, s) + "·";
  return out + "[" + m.label(e) + "]";
}

}  // namespace

// ---------------------------------------------------------------------------

Catalog parse_catalog(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw CatalogError(Kind::parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what(),
                       line, col);
  }
  try {
    return Parser(root).run();
  } catch (const json::type_error& e) {
    throw CatalogError(Kind::schema, e.what());
  }
}

Catalog load_catalog(const std::string& path) {
  if (path == "default") return default_catalog();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError(Kind::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

const std::string& default_catalog_text() {
  static const std::string text(kDefaultCatalogJson);
  return text;
}

const Catalog& default_catalog() {
  static const Catalog c = parse_catalog(default_catalog_text());
  return c;
}

json catalog_to_json(const Catalog& c) {
  json rings = json::object(), modules = json::object(), subs = json::object();
  for (const auto& [id, r] : c.rings) rings[id] = ring_json(r, c, false);
  for (const auto& [id, m] : c.modules) modules[id] = module_json(m, c, false);
  for (const auto& [id, s] : c.submodules) {
    json g = json::array();
    for (const auto& t : s.generators) g.push_back(t.size() == 1 ? json(t[0]) : json(t));
    subs[id] = {{"module", s.module}, {"generators", g}};
  }
  const auto& d = c.defaults;
  json defaults = {{"ring_cap", d.ring_cap},
                   {"ideal_cap", d.ideal_cap},
                   {"module_cap", d.module_cap},
                   {"lattice_cap", d.lattice_cap},
                   {"lattice_module_max", d.lattice_module_max},
                   {"hom_cap", d.hom_cap},
                   {"quadruple_zero_limit", d.quadruple_zero_limit},
                   {"suite", d.suite}};
  return {{"rings", rings}, {"modules", modules}, {"submodules", subs}, {"defaults", defaults}};
}

void write_catalog(const Catalog& c, const std::string& path) { write_json(catalog_to_json(c), path); }

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string catalog_digest(const Catalog& c) { return sha256_hex(catalog_to_json(c).dump()); }

Elem resolve_generator(const FiniteModule& m, const std::vector<Elem>& tuple) {
  if (tuple.size() == 1 && m.components().size() != 1) {
    if (tuple[0] >= m.size()) throw SpecError("generator index " + std::to_string(tuple[0]) + " out of range");
    return tuple[0];
  }
  if (tuple.size() != m.components().size())
    throw SpecError("generator tuple has " + std::to_string(tuple.size()) + " coordinates, module has " +
                    std::to_string(m.components().size()) + " components");
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (tuple[i] >= m.components()[i]->size()) throw SpecError("generator coordinate out of range");
  return m.compose(tuple);
}

// Reports ---------------------------------------------------------------------

std::string render_witness(const FiniteModule& m, PredicateId id, const Witness& w) {
  if (!w.element) return "";
  const Elem e = *w.element;
  const auto& s = w.scalars;
  switch (id) {
    case PredicateId::c1a:
    case PredicateId::wc1a:
      if (s.size() == 3)
        return product_text(m, {s[0], s[1], s[2]}, e) + " in N; " + product_text(m, {s[0], s[1]}, e) + " and " +
               product_text(m, {s[2]}, e) + " not in N";
      break;
    case PredicateId::classical_prime:
    case PredicateId::weakly_classical_prime:
      if (s.size() == 2)
        return product_text(m, {s[0], s[1]}, e) + " in N; " + product_text(m, {s[0]}, e) + " and " +
               product_text(m, {s[1]}, e) + " not in N";
      break;
    case PredicateId::prime:
      if (s.size() == 1)
        return product_text(m, {s[0]}, e) + " in N; " + scalar_text(m, s[0]) + " not in (N:M) and [" + m.label(e) +
               "] not in N";
      break;
    case PredicateId::weakly_1abs_submodule:
      if (s.size() == 2)
        return product_text(m, {s[0], s[1]}, e) + " in N; " + scalar_text(m, s[0]) + "·" + scalar_text(m, s[1]) +
               " not in (N:M) and [" + m.label(e) + "] not in N";
      break;
    case PredicateId::weakly_semiprime:
      if (s.size() == 1)
        return product_text(m, {s[0], s[0]}, e) + " in N; " + product_text(m, {s[0]}, e) + " not in N";
      break;
    case PredicateId::nilpotent:
      break;
  }
  return "";
}

namespace {

json witness_json(const FiniteModule& m, PredicateId id, const Witness& w) {
  json j;
  j["scalars"] = w.scalars;
  json tuple = w.scalars;
  if (w.element) {
    j["element"] = *w.element;
    j["element_label"] = m.label(*w.element);
    tuple.push_back(*w.element);
  }
  j["tuple"] = tuple;
  if (m.mode() == ScalarMode::integer_image) {
    json reps = json::array();
    for (Elem s : w.scalars) reps.push_back(std::stoull(scalar_text(m, s)));
    j["representatives"] = reps;
  }
  if (!w.ideals.empty()) j["ideals"] = w.ideals;
  if (w.submodule) j["submodule"] = *w.submodule;
  j["rendered"] = render_witness(m, id, w);
  return j;
}

}  // namespace

json classification_to_json(const FiniteModule& m, const std::string& name, const Submodule& n,
                            const ClassificationReport& r) {
  json preds = json::array();
  for (auto id : kAllPredicates) {
    const auto& v = r[id];
    json p = {{"id", to_string(id)}, {"holds", v.holds}, {"instances_scanned", v.instances_scanned}};
    p["witness"] = v.witness ? witness_json(m, id, *v.witness) : json(nullptr);
    if (v.exponent) p["exponent"] = *v.exponent;
    preds.push_back(std::move(p));
  }
  json qz = json::array();
  for (const auto& q : r.quadruple_zeros)
    qz.push_back({{"tuple", {q.a, q.b, q.c, q.m}},
                  {"rendered", product_text(m, {q.a, q.b, q.c}, q.m) + " = 0 in " + m.spec().describe()}});
  json colons = json::array();
  for (const auto& c : r.colons) {
    json e = {{"element", c.element},
              {"element_label", m.label(c.element)},
              {"colon_generators", c.colon.generators},
              {"colon_size", c.colon.size()},
              {"weakly_one_abs_prime", c.weakly_one_abs_prime}};
    if (c.integer_generator) e["integer_generator"] = *c.integer_generator;
    colons.push_back(std::move(e));
  }
  json gens = json::array();
  for (Elem g : n.generators) gens.push_back(m.label(g));
  return {{"submodule", name},
          {"module", m.spec().describe()},
          {"scalar_mode", to_string(m.mode())},
          {"size", n.size()},
          {"generators", gens},
          {"predicates", preds},
          {"quadruple_zeros", qz},
          {"colons", colons}};
}

json classification_report_json(const std::string& digest, const std::vector<json>& entries) {
  return {{"schema_version", kSchemaVersion}, {"catalog_digest", digest}, {"submodules", entries}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CatalogError(Kind::io, "cannot write " + path);
  out << dump_json(j);
  if (!out) throw CatalogError(Kind::io, "write failed for " + path);
}

}  // namespace plab
