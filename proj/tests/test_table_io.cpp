#include "chenruan/table_io.hpp"

#include "doctest.h"

using namespace chenruan;

TEST_CASE("genus two table document") {
    const ChenRuanRing ring(2);
    const auto doc = build_table_document(ring);
    CHECK(doc.genus == 2);
    CHECK(doc.basis.size() == 34);
    CHECK(doc.basis[0].sector == "O");
    CHECK(doc.basis[0].monomial == "1");
    CHECK(doc.basis[2].monomial == "k^2");
    CHECK(doc.basis[4].sector == "0001");
    CHECK(doc.basis[5].monomial == "e1.f1");
    CHECK(doc.basis[5].cr_degree == 4);
    CHECK(doc.thaddeus_number == "4");
    CHECK(doc.v == "1/4");
    CHECK_FALSE(doc.products.empty());
}

TEST_CASE("JSON round trip reproduces live products") {
    for (int g : {2, 3}) {
        const ChenRuanRing ring(g);
        const auto doc = build_table_document(ring);
        const std::string text = to_json(doc);
        CHECK(text.find("\"genus\"") != std::string::npos);
        CHECK(text.find("\"pairings\"") != std::string::npos);
        const auto back = table_from_json(text);
        CHECK(back.basis.size() == doc.basis.size());
        CHECK(back.products.size() == doc.products.size());
        CHECK(back.pairings.size() == doc.pairings.size());
        CHECK(to_json(back) == text);
        const auto replay = replay_products(back, ring);
        CHECK(replay.checked == doc.products.size());
        CHECK(replay.mismatches.empty());
        for (const auto& block : back.pairings) CHECK(block.rank() == block.rows.size());
    }
}

TEST_CASE("tampered documents are caught") {
    const ChenRuanRing ring(2);
    auto doc = build_table_document(ring);
    doc.products.front().result.front().second += 1;
    CHECK(replay_products(doc, ring).mismatches.size() == 1);
    CHECK_THROWS_AS(table_from_json("{\"genus\": 2}"), std::invalid_argument);
    CHECK_THROWS_AS(table_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(replay_products(doc, ChenRuanRing(3)), GenusMismatch);
}
