#include "chenruan/invariant_exterior.hpp"
#include "chenruan/gamma_group.hpp"
#include "chenruan/exact_arith.hpp"

#include "doctest.h"

#include <random>

using namespace chenruan;

namespace {

// Independent sign oracle: bubble-sort the concatenated generator list and
// count transpositions.
int sign_by_sorting(ExteriorMonomial a, ExteriorMonomial b) {
    std::vector<int> gens;
    for (int i = 0; i < 64; ++i)
        if (a.mask >> i & 1) gens.push_back(i);
    for (int i = 0; i < 64; ++i)
        if (b.mask >> i & 1) gens.push_back(i);
    int swaps = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j + 1 < gens.size() - i; ++j) {
            if (gens[j] == gens[j + 1]) return 0;
            if (gens[j] > gens[j + 1]) {
                std::swap(gens[j], gens[j + 1]);
                ++swaps;
            }
        }
    for (std::size_t j = 0; j + 1 < gens.size(); ++j)
        if (gens[j] == gens[j + 1]) return 0;
    return swaps % 2 ? -1 : 1;
}

ExteriorClass random_class(std::mt19937& rng, int g, bool even_only) {
    const int n = exterior_rank(g);
    std::uniform_int_distribution<std::uint64_t> mask(0, (1ULL << n) - 1);
    std::uniform_int_distribution<int> coef(-4, 4), count(0, 4);
    ExteriorClass out(g);
    for (int t = count(rng); t > 0; --t) {
        ExteriorMonomial m{mask(rng)};
        if (even_only && m.degree() % 2) m.mask &= m.mask - 1;
        out.add_term(m, coef(rng));
    }
    return out;
}

ExteriorMonomial mono(const char* text, int g) { return parse_monomial(text, g).monomial; }

}  // namespace

TEST_CASE("wedge sign agrees with the sorting oracle") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint64_t> mask(0, (1ULL << 8) - 1);
    for (int i = 0; i < 2000; ++i) {
        ExteriorMonomial a{mask(rng)}, b{mask(rng)};
        CHECK(wedge_sign(a, b) == sign_by_sorting(a, b));
    }
}

TEST_CASE("wedge basics") {
    const int g = 3;
    const ExteriorClass x(g, mono("e1.f2", g), 3);
    CHECK(wedge(ExteriorClass::unit(g), x) == x);
    CHECK(wedge(x, ExteriorClass::unit(g)) == x);
    const ExteriorClass e1f1(g, mono("e1.f1", g));
    CHECK(wedge(e1f1, e1f1).is_zero());
    const ExteriorClass e2f2(g, mono("e2.f2", g));
    const auto prod = wedge(e1f1, e2f2);
    CHECK(prod == ExteriorClass(g, mono("e1.f1.e2.f2", g), 1));
    CHECK(wedge(e2f2, e1f1) == prod);
    // f1 ∧ e1 = -e1 ∧ f1
    CHECK(wedge(ExteriorClass(g, mono("f1", g)), ExteriorClass(g, mono("e1", g))) == BigRational(-1) * e1f1);
    CHECK_THROWS_AS(wedge(ExteriorClass(2), ExteriorClass(3)), GenusMismatch);
}

TEST_CASE("wedge is associative and unital; even classes commute") {
    std::mt19937 rng(5);
    for (int g : {2, 3, 4}) {
        for (int i = 0; i < 200; ++i) {
            const auto a = random_class(rng, g, false);
            const auto b = random_class(rng, g, false);
            const auto c = random_class(rng, g, false);
            CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
            CHECK(wedge(ExteriorClass::unit(g), a) == a);
            const auto e = random_class(rng, g, true);
            CHECK(e.is_even());
            CHECK(wedge(e, b) == wedge(b, e));
        }
    }
}

TEST_CASE("theta bar and its powers") {
    CHECK(theta_bar(2) == ExteriorClass(2, mono("e1.f1", 2)));
    CHECK(theta_bar(3) == ExteriorClass(3, mono("e1.f1", 3)) + ExteriorClass(3, mono("e2.f2", 3)));
    for (int g = 2; g <= 7; ++g) {
        ExteriorClass power = ExteriorClass::unit(g);
        for (int k = 0; k < g - 1; ++k) power = wedge(power, theta_bar(g));
        // Multinomial expansion: each ordering of the g-1 pairs contributes +1.
        CHECK(power == ExteriorClass(g, top_monomial(g), BigRational(factorial(g - 1))));
    }
}

TEST_CASE("kappa pullback powers") {
    CHECK(kappa_pullback_power(2, 1) == ExteriorClass(2, mono("e1.f1", 2), 2));
    for (int g = 2; g <= 5; ++g) CHECK(kappa_pullback_power(g, 0) == ExteriorClass::unit(g));
    CHECK(kappa_pullback_power(2, 2).is_zero());
    CHECK(kappa_pullback_power(3, 5).is_zero());
    for (int g = 2; g <= 8; ++g)
        CHECK(integrate_orb(kappa_pullback_power(g, g - 1)) == BigRational((BigInt(1) << (g - 1)) * factorial(g - 1)));
}

TEST_CASE("orbifold integral picks the top coefficient") {
    CHECK(integrate_orb(ExteriorClass(3, top_monomial(3))) == 1);
    CHECK(integrate_orb(ExteriorClass::unit(3)) == 0);
    CHECK(integrate_orb(ExteriorClass(3, top_monomial(3), 5) + ExteriorClass(3, mono("e1.f1", 3))) == 5);
}

TEST_CASE("sector model satisfies Poincaré duality") {
    for (int g = 2; g <= 4; ++g) {
        const int n = exterior_rank(g);
        for (int i = 0; i <= n; i += 2) {
            const auto rows = monomials_of_degree(g, i);
            const auto cols = monomials_of_degree(g, n - i);
            CHECK(BigInt(rows.size()) == binomial(n, i));
            // Each monomial pairs nontrivially with exactly its complement, so
            // full rank means every row has a single nonzero entry in a
            // distinct column.
            std::vector<int> hits(cols.size(), 0);
            for (const auto& r : rows) {
                int nonzero = 0;
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    const auto v = integrate_orb(wedge(ExteriorClass(g, r), ExteriorClass(g, cols[c])));
                    if (v != 0) {
                        ++nonzero;
                        ++hits[c];
                        CHECK((v == 1 || v == -1));
                    }
                }
                CHECK(nonzero == 1);
            }
            for (int h : hits) CHECK(h == 1);
        }
    }
}

TEST_CASE("monomial text") {
    CHECK(to_string(ExteriorMonomial{}) == "1");
    CHECK(to_string(top_monomial(3)) == "e1.f1.e2.f2");
    const auto s = parse_monomial("f1.e1", 2);
    CHECK(s.sign == -1);
    CHECK(s.monomial.mask == 3);
    CHECK(parse_monomial("e1.e1", 2).sign == 0);
    CHECK_THROWS_AS(parse_monomial("e2", 2), std::out_of_range);
    CHECK_THROWS_AS(parse_monomial("x1", 2), std::invalid_argument);
    CHECK(even_monomials(3).size() == 8);
    CHECK(even_monomials(4).size() == 32);
}
