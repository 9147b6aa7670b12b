#include "chenruan/table_io.hpp"

#include "chenruan/expression.hpp"

#include "json.hpp"

namespace chenruan {

using nlohmann::json;

TableDocument build_table_document(const ChenRuanRing& ring) {
    const int g = ring.genus();
    const CanonicalBasis basis(g);
    TableDocument doc;
    doc.genus = g;
    for (const auto& e : basis.elements()) {
        if (e.is_untwisted()) doc.basis.push_back({"O", e.name(), e.cr_degree});
        else doc.basis.push_back({e.label.str(), to_string(e.monomial), e.cr_degree});
    }
    doc.thaddeus_number = to_string(ring.intersection_constants().thaddeus_number);
    doc.v = to_string(ring.intersection_constants().v);
    const StructureTable table(ring, basis);
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table.size(); ++j)
            if (!table.product(i, j).empty()) doc.products.push_back({i, j, table.product(i, j)});
    doc.pairings = gram_blocks(ring, basis);
    return doc;
}

std::string to_json(const TableDocument& doc) {
    json out;
    out["genus"] = doc.genus;
    json basis = json::array();
    for (std::size_t i = 0; i < doc.basis.size(); ++i) {
        const auto& e = doc.basis[i];
        basis.push_back({{"index", i}, {"sector", e.sector}, {"monomial", e.monomial}, {"cr_degree", e.cr_degree}});
    }
    out["basis"] = std::move(basis);
    out["constants"] = {{"thaddeus_number", doc.thaddeus_number}, {"v", doc.v}};
    json products = json::array();
    for (const auto& p : doc.products) {
        json result = json::array();
        for (const auto& [k, c] : p.result) result.push_back({k, to_string(c)});
        products.push_back({{"left", p.left}, {"right", p.right}, {"result", std::move(result)}});
    }
    out["products"] = std::move(products);
    json pairings = json::array();
    for (const auto& b : doc.pairings) {
        json entries = json::array();
        for (const auto& [r, c, v] : b.entries) entries.push_back({r, c, to_string(v)});
        pairings.push_back({{"degree", b.degree},
                            {"dual_degree", b.dual_degree},
                            {"rows", b.rows},
                            {"cols", b.cols},
                            {"entries", std::move(entries)}});
    }
    out["pairings"] = std::move(pairings);
    return out.dump(1) + "\n";
}

TableDocument table_from_json(const std::string& text) {
    try {
        const json in = json::parse(text);
        for (const char* key : {"genus", "basis", "constants", "products", "pairings"})
            if (!in.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
        TableDocument doc;
        doc.genus = in.at("genus").get<int>();
        for (const auto& e : in.at("basis"))
            doc.basis.push_back({e.at("sector").get<std::string>(), e.at("monomial").get<std::string>(),
                                 e.at("cr_degree").get<int>()});
        doc.thaddeus_number = in.at("constants").at("thaddeus_number").get<std::string>();
        doc.v = in.at("constants").at("v").get<std::string>();
        for (const auto& p : in.at("products")) {
            TableDocument::Product prod{p.at("left").get<std::size_t>(), p.at("right").get<std::size_t>(), {}};
            for (const auto& term : p.at("result"))
                prod.result.emplace_back(term.at(0).get<std::size_t>(), parse_rational(term.at(1).get<std::string>()));
            doc.products.push_back(std::move(prod));
        }
        for (const auto& b : in.at("pairings")) {
            GramBlock block{b.at("degree").get<int>(), b.at("dual_degree").get<int>(),
                            b.at("rows").get<std::vector<std::size_t>>(), b.at("cols").get<std::vector<std::size_t>>(),
                            {}};
            for (const auto& e : b.at("entries"))
                block.entries.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                                           parse_rational(e.at(2).get<std::string>()));
            doc.pairings.push_back(std::move(block));
        }
        return doc;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed table document: ") + e.what());
    }
}

CRClass basis_class(const TableDocument& doc, std::size_t index) {
    const auto& e = doc.basis.at(index);
    if (e.sector == "O") return parse_class(e.monomial, doc.genus);
    return parse_class("[" + e.sector + "; " + e.monomial + "]", doc.genus);
}

ReplayResult replay_products(const TableDocument& doc, const ChenRuanRing& ring) {
    if (doc.genus != ring.genus()) throw GenusMismatch("table genus differs from the ring");
    ReplayResult out;
    std::vector<CRClass> classes;
    for (std::size_t i = 0; i < doc.basis.size(); ++i) classes.push_back(basis_class(doc, i));
    auto assemble = [&](const SparseVector& v) {
        CRClass acc(doc.genus);
        for (const auto& [k, c] : v) acc += c * classes.at(k);
        return acc;
    };
    for (const auto& p : doc.products) {
        ++out.checked;
        const CRClass live = ring.product(classes.at(p.left), classes.at(p.right));
        if (live != assemble(p.result))
            out.mismatches.push_back("product " + std::to_string(p.left) + " x " + std::to_string(p.right) +
                                     ": stored " + format_class(assemble(p.result)) + ", live " + format_class(live));
    }
    return out;
}

}  // namespace chenruan
