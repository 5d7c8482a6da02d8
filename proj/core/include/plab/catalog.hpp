#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plab/classify.hpp"
#include "plab/error.hpp"
#include "plab/module.hpp"
#include "plab/ring.hpp"

namespace plab {

class CatalogError : public Error {
 public:
  enum class Kind { parse, schema, unresolved_reference, cap_exceeded, io };

  CatalogError(Kind kind, const std::string& what, std::size_t line = 0, std::size_t column = 0);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

const char* to_string(CatalogError::Kind kind) noexcept;

struct CatalogDefaults {
  std::size_t ring_cap = 256;
  std::size_t ideal_cap = 4096;
  std::size_t module_cap = 2048;
  std::size_t lattice_cap = 65536;
  std::size_t lattice_module_max = 256;
  std::size_t hom_cap = 100000;
  std::size_t quadruple_zero_limit = 16;
  /// Check ids run by default; empty means every registered check.
  std::vector<std::string> suite;

  ModuleOptions module_options() const;
  friend bool operator==(const CatalogDefaults&, const CatalogDefaults&) = default;
};

/// A generator is a coordinate tuple for free/product modules or a single
/// element index otherwise.
struct CatalogSubmodule {
  std::string module;
  std::vector<std::vector<Elem>> generators;
  friend bool operator==(const CatalogSubmodule&, const CatalogSubmodule&) = default;
};

struct Catalog {
  std::map<std::string, RingSpec> rings;
  std::map<std::string, ModuleSpec> modules;
  std::map<std::string, CatalogSubmodule> submodules;
  CatalogDefaults defaults;

  /// Specs compare equal entry by entry.
  friend bool operator==(const Catalog& a, const Catalog& b);
};

/// Parses and validates a catalog. Every cross-reference must resolve and
/// every module size bound must respect defaults.module_cap.
Catalog parse_catalog(const std::string& text);
Catalog load_catalog(const std::string& path);
/// The catalog shipped with the library; "default" as a path also loads it.
const Catalog& default_catalog();
const std::string& default_catalog_text();

nlohmann::json catalog_to_json(const Catalog& c);
void write_catalog(const Catalog& c, const std::string& path);

/// Hex SHA-256 over the canonical serialization.
std::string sha256_hex(const std::string& data);
std::string catalog_digest(const Catalog& c);

/// Element of `m` named by a catalog generator tuple.
Elem resolve_generator(const FiniteModule& m, const std::vector<Elem>& tuple);

// Report serialization. Keys are sorted; witnesses carry the index tuple and a
// rendered string.

inline constexpr int kSchemaVersion = 1;

std::string render_witness(const FiniteModule& m, PredicateId id, const Witness& w);

nlohmann::json classification_to_json(const FiniteModule& m, const std::string& name, const Submodule& n,
                                       const ClassificationReport& r);

/// Wraps per-submodule entries with schema_version and catalog_digest.
nlohmann::json classification_report_json(const std::string& digest, const std::vector<nlohmann::json>& entries);

/// Pretty-printed, sorted-key JSON text followed by a newline.
std::string dump_json(const nlohmann::json& j);
void write_json(const nlohmann::json& j, const std::string& path);

}  // namespace plab
