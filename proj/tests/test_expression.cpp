#include "chenruan/expression.hpp"

#include "doctest.h"

#include <random>

using namespace chenruan;

TEST_CASE("parse simple expressions") {
    const int g = 2;
    const auto x = parse_class("k^2 + 3*[0101; e1.f1]", g);
    CHECK(x == CRClass::kappa_power(g, 2) + CRClass::sector_top(TwoTorsionLabel::parse("0101", g), 3));
    CHECK(parse_class("[0101; f1.e1]", g) == BigRational(-1) * parse_class("[0101; e1.f1]", g));
    CHECK(parse_class("[1000;1]", g) == CRClass::sector_unit(TwoTorsionLabel::a(g, 1)));
    CHECK(parse_class("[1000]", g) == CRClass::sector_unit(TwoTorsionLabel::a(g, 1)));
    CHECK(parse_class("1/2 - k", g) == CRClass::kappa_power(g, 0, BigRational(1, 2)) - CRClass::kappa_power(g, 1));
    CHECK(parse_class("-2/4*k^3", g) == CRClass::kappa_power(g, 3, BigRational(-1, 2)));
    CHECK(parse_class("[O]", g) == CRClass::unit(g));
    CHECK(parse_class("k^9", g).is_zero());
    CHECK(parse_class("0", g).is_zero());
    CHECK(parse_class("[0101; e1.e1]", g).is_zero());
    CHECK(parse_class("  k  +  k ", g) == CRClass::kappa_power(g, 1, 2));
}

TEST_CASE("parse errors carry positions") {
    const int g = 2;
    auto column_of = [&](const char* text) -> std::size_t {
        try {
            parse_class(text, g);
        } catch (const ParseError& e) {
            return e.column();
        }
        return 0;
    };
    CHECK(column_of("[01; e1]") == 2);       // label length
    CHECK(column_of("[0101; e2.f2]") == 8);  // generator index
    CHECK(column_of("[0101; e1]") == 8);     // odd degree
    CHECK(column_of("k +") == 4);
    CHECK(column_of("k ** k") == 3);
    CHECK(column_of("3/0") == 1);
    CHECK(column_of("[0101; e1.f1") == 13);
    CHECK(column_of("[O; e1.f1]") == 10);
    CHECK(column_of("") == 1);
    CHECK_THROWS_WITH_AS(parse_class("[01; e1]", g), doctest::Contains("label length"), ParseError);
}

TEST_CASE("format output") {
    const int g = 2;
    CHECK(format_class(CRClass::kappa_power(g, 2, 8)) == "8*k^2");
    CHECK(format_class(CRClass(g)) == "0");
    CHECK(format_class(parse_class("-1 + k - 3/2*[0101; f1.e1]", g)) == "-1 + k + 3/2*[0101; e1.f1]");
    CHECK(format_class(parse_class("-[1000]", g)) == "-[1000; 1]");
}

TEST_CASE("round trip on generated expressions") {
    std::mt19937 rng(2024);
    for (int g : {2, 3}) {
        const auto monos = even_monomials(g);
        std::uniform_int_distribution<int> terms(1, 5), coin(0, 1), num(-9, 9), den(1, 6);
        std::uniform_int_distribution<std::size_t> pick_mono(0, monos.size() - 1);
        std::uniform_int_distribution<std::uint64_t> pick_label(0, (1ULL << (2 * g)) - 1);
        std::uniform_int_distribution<int> pick_power(0, 3 * g - 3);
        for (int i = 0; i < 100; ++i) {
            CRClass x(g);
            for (int t = terms(rng); t > 0; --t) {
                const BigRational c = make_rational(num(rng), den(rng));
                if (coin(rng)) x += c * CRClass::kappa_power(g, pick_power(rng));
                else {
                    const TwoTorsionLabel l(g, pick_label(rng));
                    if (l.is_trivial()) continue;
                    x += CRClass::sector(l, ExteriorClass(g, monos[pick_mono(rng)], c));
                }
            }
            const std::string text = format_class(x);
            CAPTURE(text);
            CHECK(parse_class(text, g) == x);
            CHECK(format_class(parse_class(text, g)) == text);
        }
    }
}
