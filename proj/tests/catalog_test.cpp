#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "plab/catalog.hpp"

using namespace plab;
using nlohmann::json;

namespace {

CatalogError::Kind error_kind(const std::string& text) {
  try {
    parse_catalog(text);
  } catch (const CatalogError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return CatalogError::Kind::io;
}

bool integers_only(const json& j) {
  if (j.is_number_float()) return false;
  if (j.is_structured())
    for (const auto& v : j)
      if (!integers_only(v)) return false;
  return true;
}

}  // namespace

TEST(Catalog, DefaultCatalogCounts) {
  const auto& c = default_catalog();
  EXPECT_GE(c.rings.size(), 10u);
  EXPECT_GE(c.modules.size(), 15u);
  EXPECT_GE(c.submodules.size(), 40u);
  for (const char* id : {"Z30.zero", "Z36.zero", "Z9.zero", "Z8cubed.L", "Z36sq.N2x3", "Z16r.p8"})
    EXPECT_TRUE(c.submodules.count(id)) << id;
  for (const char* id : {"Z2xyz", "Z4xZ9", "Z2xZ3", "Z8", "Z16", "Z27"}) EXPECT_TRUE(c.rings.count(id)) << id;
}

TEST(Catalog, RoundTrip) {
  const auto& c = default_catalog();
  const auto again = parse_catalog(catalog_to_json(c).dump());
  EXPECT_TRUE(again == c);
  EXPECT_EQ(catalog_digest(again), catalog_digest(c));
}

TEST(Catalog, WriteAndLoad) {
  const auto path = (std::filesystem::temp_directory_path() / "plab_catalog_roundtrip.json").string();
  write_catalog(default_catalog(), path);
  EXPECT_TRUE(load_catalog(path) == default_catalog());
  std::remove(path.c_str());
}

TEST(Catalog, ErrorsAreDistinct) {
  EXPECT_EQ(error_kind(""), CatalogError::Kind::parse);
  EXPECT_EQ(error_kind("{\"rings\": {\"a\": {\"kind\": \"zn\", \"n\": 4}"), CatalogError::Kind::parse);
  EXPECT_EQ(error_kind(R"({"modules": {"m": {"kind": "ring_as_module", "ring": "nope", "scalar_mode": "ring"}}})"),
            CatalogError::Kind::unresolved_reference);
  EXPECT_EQ(error_kind(R"({"submodules": {"s": {"module": "ghost", "generators": []}}})"),
            CatalogError::Kind::unresolved_reference);
  EXPECT_EQ(error_kind(R"({"colors": {}})"), CatalogError::Kind::schema);
  EXPECT_EQ(error_kind(R"({"rings": {"a": {"kind": "zn", "n": 4}}, "modules": {"m": {"kind": "free", "ring": "a",
            "rank": 9, "scalar_mode": "ring"}}})"),
            CatalogError::Kind::cap_exceeded);
  EXPECT_EQ(error_kind(R"({"rings": {"a": {"kind": "zn", "n": 4}}, "modules": {"m": {"kind": "free", "ring": "a",
            "rank": 2, "scalar_mode": "sideways"}}})"),
            CatalogError::Kind::schema);
}

TEST(Catalog, ParseErrorCarriesPosition) {
  try {
    parse_catalog("{\n  \"rings\": [1,\n}");
    FAIL();
  } catch (const CatalogError& e) {
    EXPECT_EQ(e.kind(), CatalogError::Kind::parse);
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Catalog, UnresolvedReferenceNamesTheId) {
  try {
    parse_catalog(R"({"modules": {"m": {"kind": "ring_as_module", "ring": "Z99x", "scalar_mode": "ring"}}})");
    FAIL();
  } catch (const CatalogError& e) {
    EXPECT_NE(std::string(e.what()).find("Z99x"), std::string::npos);
  }
}

TEST(Catalog, UnwritablePathIsIoError) {
  try {
    write_json(json::object(), "/nonexistent-dir/x/report.json");
    FAIL();
  } catch (const CatalogError& e) {
    EXPECT_EQ(e.kind(), CatalogError::Kind::io);
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x/report.json"), std::string::npos);
  }
}

TEST(Catalog, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Catalog, Z30ClassificationReport) {
  const auto m = build_module(ModuleSpec::ring_as_module(RingSpec::zn(30), ScalarMode::integer_image));
  const auto n = zero_submodule(*m);
  const auto entry = classification_to_json(*m, "Z30.zero", n, classify_submodule(n));
  const auto doc = classification_report_json(catalog_digest(default_catalog()), {entry});
  EXPECT_EQ(doc["schema_version"], 1);
  const auto& preds = doc["submodules"][0]["predicates"];
  bool seen = false;
  for (const auto& p : preds) {
    if (p["id"] != "C1A") continue;
    seen = true;
    EXPECT_FALSE(p["holds"].get<bool>());
    EXPECT_EQ(p["witness"]["tuple"], json({2, 3, 5, 1}));
    EXPECT_EQ(p["witness"]["rendered"], "2·3·5·[1] in N; 2·3·[1] and 5·[1] not in N");
  }
  EXPECT_TRUE(seen);
  EXPECT_EQ(doc["submodules"][0]["quadruple_zeros"][0]["rendered"], "2·3·5·[1] = 0 in Z30 over Z");
  EXPECT_TRUE(integers_only(doc));
  EXPECT_EQ(json::parse(dump_json(doc)), doc);
}

TEST(Catalog, GeneratorTuples) {
  const auto m = build_module(ModuleSpec::free(RingSpec::zn(36), 2, ScalarMode::integer_image),
                              default_catalog().defaults.module_options());
  EXPECT_EQ(resolve_generator(*m, {1, 1}), 37u);
  EXPECT_EQ(resolve_generator(*m, {37}), 37u);
  EXPECT_THROW(resolve_generator(*m, {1, 2, 3}), SpecError);
  EXPECT_THROW(resolve_generator(*m, {40, 0}), SpecError);
}
