#include "doctest.h"

#include <nlohmann/json.hpp>

#include "jordanlab/catalog.hpp"

using namespace jordanlab;

TEST_CASE("catalog builds all descriptor kinds") {
    auto doc = nlohmann::json::parse(R"({
        "Z7": {"kind": "cyclic", "modulus": 7},
        "B":  {"kind": "product", "factors": ["Z2", "Z2"]},
        "Z2": {"kind": "cyclic", "modulus": 2},
        "M":  {"kind": "matrix", "modulus": 3, "dim": 2},
        "N":  {"kind": "tables", "add": [[0,1],[1,0]], "mul": [[0,0],[0,0]]}
    })");
    auto catalog = Catalog::from_json(doc);
    CHECK(catalog.get("Z7")->size() == 7);
    CHECK(catalog.get("B")->size() == 4);  // forward reference to Z2 resolved
    CHECK(catalog.get("M")->size() == 81);
    CHECK(!catalog.get("N")->unit().has_value());
    CHECK(catalog.labels().size() == 5);
}

TEST_CASE("cyclic references are rejected") {
    auto doc = nlohmann::json::parse(R"({
        "A": {"kind": "product", "factors": ["B", "B"]},
        "B": {"kind": "product", "factors": ["A", "A"]}
    })");
    CHECK_THROWS_AS(Catalog::from_json(doc), CatalogError);
}

TEST_CASE("undefined references and unknown kinds are rejected") {
    CHECK_THROWS_AS(Catalog::from_json(nlohmann::json::parse(
                        R"({"A": {"kind": "product", "factors": ["X", "X"]}})")),
                    CatalogError);
    CHECK_THROWS_AS(
        Catalog::from_json(nlohmann::json::parse(R"({"A": {"kind": "nope"}})")),
        CatalogError);
}

TEST_CASE("unknown label lookup") {
    Catalog catalog;
    catalog.add("Z5", cyclic_ring(5));
    CHECK_THROWS_AS(catalog.get("Z6"), UnknownLabel);
    CHECK(catalog.contains("Z5"));
}

TEST_CASE("carrier cap applies to catalog rings") {
    auto doc = nlohmann::json::parse(R"({"M": {"kind": "matrix", "modulus": 2, "dim": 4}})");
    CHECK_THROWS_AS(Catalog::from_json(doc), CarrierTooLarge);
}

TEST_CASE("catalog hash is deterministic and input-sensitive") {
    auto doc1 = nlohmann::json::parse(R"({"Z5": {"kind": "cyclic", "modulus": 5}})");
    auto doc2 = nlohmann::json::parse(R"({"Z6": {"kind": "cyclic", "modulus": 6}})");
    CHECK(Catalog::from_json(doc1).hash() == Catalog::from_json(doc1).hash());
    CHECK(Catalog::from_json(doc1).hash() != Catalog::from_json(doc2).hash());
}
