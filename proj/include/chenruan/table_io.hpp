#pragma once

#include "chenruan/cr_ring.hpp"
#include "chenruan/verification.hpp"

#include <string>
#include <vector>

namespace chenruan {

/// Persisted structure constants of one genus.  Rationals are stored as exact
/// "p/q" text and the basis order is the canonical one.
struct TableDocument {
    struct BasisEntry {
        std::string sector;    // "O" or the label bitstring
        std::string monomial;  // "k^m" form on the untwisted sector, "e1.f1" form otherwise
        int cr_degree;
    };
    struct Product {
        std::size_t left;
        std::size_t right;
        SparseVector result;
    };

    int genus = 0;
    std::vector<BasisEntry> basis;
    std::string thaddeus_number;
    std::string v;
    std::vector<Product> products;  // nonzero products only
    std::vector<GramBlock> pairings;
};

TableDocument build_table_document(const ChenRuanRing& ring);

/// JSON with top-level keys "genus", "basis", "constants", "products",
/// "pairings".
std::string to_json(const TableDocument& doc);
/// Throws std::invalid_argument on schema violations.
TableDocument table_from_json(const std::string& text);

/// Class named by one basis entry of a document.
CRClass basis_class(const TableDocument& doc, std::size_t index);

struct ReplayResult {
    std::size_t checked = 0;
    std::vector<std::string> mismatches;
};

/// Recomputes every listed product with the live ring and compares it with
/// the stored result.
ReplayResult replay_products(const TableDocument& doc, const ChenRuanRing& ring);

}  // namespace chenruan
