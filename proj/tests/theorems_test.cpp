#include <gtest/gtest.h>

#include <set>

#include "naive.hpp"
#include "plab/theorems.hpp"

using namespace plab;

namespace {

Catalog catalog_from(const std::string& text) { return parse_catalog(text); }

const char* kLocalCatalog = R"({
  "rings": {"Z16": {"kind": "zn", "n": 16}, "Z8": {"kind": "zn", "n": 8}},
  "modules": {
    "Z16r": {"kind": "ring_as_module", "ring": "Z16", "scalar_mode": "ring"},
    "Z16_mod_8": {"kind": "cyclic_quotient", "ring": "Z16", "ideal_generators": [8], "scalar_mode": "ring"},
    "Z8r": {"kind": "ring_as_module", "ring": "Z8", "scalar_mode": "ring"},
    "Z8sq": {"kind": "free", "ring": "Z8", "rank": 2, "scalar_mode": "ring"},
    "Z8_mod_4": {"kind": "cyclic_quotient", "ring": "Z8", "ideal_generators": [4], "scalar_mode": "ring"}
  },
  "submodules": {"Z16r.p8": {"module": "Z16r", "generators": [8]}}
})";

}  // namespace

TEST(Registry, ClosedAndOrdered) {
  const auto& reg = check_registry();
  ASSERT_EQ(reg.size(), 27u);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    const std::string expect = (i < 9 ? "T0" : "T") + std::to_string(i + 1);
    EXPECT_EQ(reg[i].id, expect);
    ids.insert(reg[i].title);
  }
  EXPECT_EQ(ids.size(), 27u);
  EXPECT_EQ(find_check("T18")->mode, CheckMode::conditional);
  EXPECT_EQ(find_check("T24")->mode, CheckMode::conditional);
  EXPECT_EQ(find_check("T99"), nullptr);
}

TEST(Suite, UnknownIdThrows) {
  const Workspace ws(catalog_from(kLocalCatalog));
  EXPECT_THROW(run_check("T00", ws), SpecError);
  SuiteOptions o;
  o.selection = std::vector<std::string>{"T01", "bogus"};
  EXPECT_THROW(run_suite(ws, o), SpecError);
}

TEST(Suite, EmptySelectionGivesEmptyReport) {
  const Workspace ws(catalog_from(kLocalCatalog));
  SuiteOptions o;
  o.selection = std::vector<std::string>{};
  const auto r = run_suite(ws, o);
  EXPECT_TRUE(r.checks.empty());
  EXPECT_EQ(r.catalog_digest, ws.digest());
}

TEST(Suite, NoMultiplicationModulesSkipsTmult) {
  const Workspace ws(catalog_from(R"({
    "rings": {"F2": {"kind": "zn", "n": 2}},
    "modules": {"V": {"kind": "free", "ring": "F2", "rank": 2, "scalar_mode": "ring"},
                "W": {"kind": "free", "ring": "F2", "rank": 3, "scalar_mode": "integer_image"}}
  })"));
  const auto r = run_check("T19", ws);
  EXPECT_EQ(r.status, CheckStatus::skipped_no_instances);
  EXPECT_EQ(r.instances_checked, 0u);
}

TEST(Suite, TfinalLocalFamily) {
  const Workspace ws(catalog_from(kLocalCatalog));
  const auto r = run_check("T26", ws);
  EXPECT_EQ(r.status, CheckStatus::verified);
  EXPECT_EQ(r.instances_checked, 5u);
  // Z16: some proper submodule fails and m^3 M != 0.
  const auto* z16 = ws.module("Z16r");
  ASSERT_NE(z16, nullptr);
  const auto& lat = z16->module->lattice();
  std::size_t failures = 0;
  for (const auto& n : lat)
    if (n.is_proper() && !naive::c1a(*z16->module, n.members, true)) ++failures;
  EXPECT_GT(failures, 0u);
  const auto* z8 = ws.module("Z8sq");
  for (const auto& n : z8->module->lattice())
    if (n.is_proper()) EXPECT_TRUE(naive::c1a(*z8->module, n.members, true));
}

TEST(Suite, Eda14) {
  const Workspace ws(catalog_from(R"({
    "rings": {"a": {"kind": "zn", "n": 8}, "b": {"kind": "product", "factors": [{"kind": "zn", "n": 2},
              {"kind": "zn", "n": 3}]}, "c": {"kind": "zn", "n": 12}}
  })"));
  const auto r = run_check("T27", ws);
  EXPECT_EQ(r.status, CheckStatus::verified);
  EXPECT_EQ(r.qualifying, 3u);
}

TEST(Suite, DefaultSuiteVerdicts) {
  const Workspace ws(default_catalog());
  EXPECT_TRUE(ws.build_errors().empty());
  const auto r = run_suite(ws);
  ASSERT_EQ(r.checks.size(), 27u);
  for (const auto& c : r.checks) {
    EXPECT_GT(c.instances_checked, 0u) << c.id;
    EXPECT_GE(c.qualifying, 3u) << c.id;
    if (c.id == "T17") continue;  // see MultiplicationPropositionOverIntegers
    EXPECT_EQ(c.status, CheckStatus::verified) << c.id;
  }
  EXPECT_GE(r.find("T14")->instances_checked, 10000u);
}

// Over Z, the ideal 3Z is proper but 3Z.Z8 = Z8, so the product condition
// never sees the scalar 3 while WC1A does.
TEST(Suite, MultiplicationPropositionOverIntegers) {
  const Workspace ws(catalog_from(R"({
    "rings": {"Z8": {"kind": "zn", "n": 8}},
    "modules": {"Z8int": {"kind": "ring_as_module", "ring": "Z8", "scalar_mode": "integer_image"},
                "Z8r": {"kind": "ring_as_module", "ring": "Z8", "scalar_mode": "ring"}}
  })"));
  const auto r = run_check("T17", ws);
  EXPECT_EQ(r.status, CheckStatus::counterexample);
  ASSERT_EQ(r.counterexample_count, 1u);
  const auto& f = r.counterexamples.front();
  EXPECT_EQ(f.instance, "Z8int N=<4>");
  EXPECT_EQ(f.witness, (std::vector<std::uint64_t>{2, 3, 2, 1}));
  const auto* m = ws.module("Z8int");
  const Elem g[] = {4};
  EXPECT_FALSE(naive::c1a(*m->module, submodule_generated(*m->module, g).members, true));
}

TEST(Suite, ParallelRunsMatchSerial) {
  const Workspace ws(catalog_from(kLocalCatalog));
  SuiteOptions one, many;
  many.jobs = 4;
  const auto a = dump_json(suite_to_json(run_suite(ws, one), false));
  const auto b = dump_json(suite_to_json(run_suite(Workspace(catalog_from(kLocalCatalog)), many), false));
  EXPECT_EQ(a, b);
}

TEST(Suite, ReportShape) {
  const Workspace ws(catalog_from(kLocalCatalog));
  SuiteOptions o;
  o.selection = std::vector<std::string>{"T26", "T01"};
  const auto j = suite_to_json(run_suite(ws, o));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["catalog_digest"], ws.digest());
  ASSERT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][0]["id"], "T01");
  EXPECT_TRUE(j["checks"][0].contains("runtime_ms"));
  EXPECT_FALSE(suite_to_json(run_suite(ws, o), false)["checks"][0].contains("runtime_ms"));
}

TEST(Lemma, FiniteRingsAreNotUmRings) {
  for (const auto& s : {RingSpec::zn(8), RingSpec::zn(12), RingSpec::trunc_poly(2, 2), RingSpec::trunc_poly(3, 1),
                        RingSpec::product({RingSpec::zn(2), RingSpec::zn(3)})}) {
    std::string msg;
    EXPECT_TRUE(um_sanity_lemma(*build_ring(s), &msg)) << s.describe() << ": " << msg;
  }
}

TEST(Miner, WeaklyButNotClassical1AbsorbingIncludesZ30) {
  const auto found = mine("wc1a_not_c1a", MineBounds{36, 64, 100000});
  const auto it = std::find_if(found.begin(), found.end(), [](const Finding& f) { return f.instance == "Z30 over Z N=<>"; });
  ASSERT_NE(it, found.end());
  EXPECT_EQ(it->witness, (std::vector<std::uint64_t>{2, 3, 5, 1}));
}

TEST(Miner, WeaklyClassicalPrimeIncludesZ9) {
  const auto found = mine("wcp_not_cp", MineBounds{9, 64, 100000});
  const auto it = std::find_if(found.begin(), found.end(), [](const Finding& f) { return f.instance == "Z9 over Z N=<>"; });
  ASSERT_NE(it, found.end());
  EXPECT_EQ(it->witness, (std::vector<std::uint64_t>{3, 3, 1}));
}

TEST(Miner, DeterministicAndLimited) {
  const auto a = mine("wc1a_not_c1a", MineBounds{16, 64, 7});
  const auto b = mine("wc1a_not_c1a", MineBounds{16, 64, 7});
  EXPECT_EQ(a.size(), 7u);
  EXPECT_EQ(a, b);
  EXPECT_THROW(mine("nope", MineBounds{}), SpecError);
}

TEST(Miner, ConverseSearchesReplay) {
  // Any finding must be a WC1A submodule, so the naive oracle confirms the first half.
  for (const char* p : {"tmain2_converse", "theo16_converse"}) {
    const auto found = mine(p, MineBounds{16, 64, 50});
    for (const auto& f : found) EXPECT_FALSE(f.witness.empty()) << p << " " << f.instance;
  }
}
