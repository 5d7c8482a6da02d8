#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plab/catalog.hpp"
#include "plab/classify.hpp"

namespace plab {

enum class CheckMode { exhaustive, conditional, miner };
enum class CheckStatus { verified, counterexample, skipped_no_instances };

const char* to_string(CheckMode m) noexcept;
const char* to_string(CheckStatus s) noexcept;

/// One logged instance: where it happened, what failed, and the witness as an
/// index tuple with a rendered form.
struct Finding {
  std::string instance;
  std::string detail;
  std::vector<std::uint64_t> witness;
  std::string rendered;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct CheckReport {
  std::string id;
  std::string title;
  CheckMode mode = CheckMode::exhaustive;
  CheckStatus status = CheckStatus::skipped_no_instances;
  std::uint64_t instances_checked = 0;
  /// Instances where the hypothesis held (the non-vacuous part of instances_checked).
  std::uint64_t qualifying = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<Finding> counterexamples;  // first kMaxLogged
  /// Conditional checks: the logged (unasserted) direction.
  std::uint64_t finding_count = 0;
  std::vector<Finding> findings;  // first kMaxLogged
  /// Instances not evaluated, with the reason (cap, missing lattice).
  std::vector<std::string> skipped;
  std::int64_t runtime_ms = 0;

  static constexpr std::size_t kMaxLogged = 20;
};

struct SuiteReport {
  std::string catalog_digest;
  std::vector<CheckReport> checks;  // sorted by id

  bool any_counterexample() const;
  const CheckReport* find(const std::string& id) const;
};

struct CheckInfo {
  std::string id;     // "T01" .. "T27"
  std::string title;  // e.g. "theo1-forward"
  CheckMode mode;
};

/// Closed registry of checks in id order.
const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(const std::string& id);

/// Built structures for one catalog, shared by every check. Rings, modules and
/// lattices are built once; WC1A flags are memoized per module.
class Workspace {
 public:
  struct Module {
    std::string id;
    ModulePtr module;
    ContextPtr ctx;
    bool lattice = false;         // lattice enumerated within caps
    std::string lattice_skip;     // reason when lattice is false
    std::vector<std::string> named_ids;
    std::vector<Submodule> named;  // catalog submodules of this module
  };
  struct Ring {
    std::string id;
    RingPtr ring;
  };

  explicit Workspace(Catalog catalog);

  const Catalog& catalog() const noexcept { return catalog_; }
  const std::string& digest() const noexcept { return digest_; }
  const std::vector<Ring>& rings() const noexcept { return rings_; }
  const std::vector<Module>& modules() const noexcept { return modules_; }
  const std::vector<std::string>& build_errors() const noexcept { return build_errors_; }
  const Module* module(const std::string& id) const;

  /// Proper submodules checked for module i: the full lattice when available,
  /// otherwise the named catalog submodules.
  std::vector<Submodule> proper_instances(std::size_t i) const;
  /// Human-readable name of a submodule of module i.
  std::string submodule_name(std::size_t i, const Submodule& n) const;
  /// WC1A of every lattice member (proper ones only meaningful). Requires lattice.
  const std::vector<char>& lattice_wc1a(std::size_t i) const;
  /// Lattice position of a submodule by member set.
  std::size_t lattice_index(std::size_t i, const ElementSet& members) const;

  struct Memo;  // per-module memo tables, opaque

 private:
  friend struct WorkspaceAccess;
  Catalog catalog_;
  std::string digest_;
  std::vector<Ring> rings_;
  std::vector<Module> modules_;
  std::vector<std::string> build_errors_;
  std::shared_ptr<Memo> memo_;
};

CheckReport run_check(const std::string& id, const Workspace& ws);

struct SuiteOptions {
  /// Unset: defaults.suite, or every check when that is empty. An empty
  /// selection runs nothing.
  std::optional<std::vector<std::string>> selection;
  unsigned jobs = 1;
};

SuiteReport run_suite(const Workspace& ws, const SuiteOptions& options = {});

nlohmann::json suite_to_json(const SuiteReport& r, bool include_runtime = true);

// Miners ---------------------------------------------------------------------

struct MineBounds {
  std::size_t max_ring = 16;
  std::size_t max_module = 64;
  std::size_t limit = 10;
};

const std::vector<std::string>& mine_patterns();

/// Deterministic search over rings Z_n, Z_a x Z_b and truncated polynomial
/// rings up to max_ring elements and their small modules. Each finding's
/// witness replays against the predicates it separates.
std::vector<Finding> mine(const std::string& pattern, const MineBounds& bounds);

/// For a maximal ideal m of R the module (R/m)^2 is the union of its
/// |R/m| + 1 lines; returns false with a message when this fails.
bool um_sanity_lemma(const FiniteRing& r, std::string* message = nullptr);

}  // namespace plab
