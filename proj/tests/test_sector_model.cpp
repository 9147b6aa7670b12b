#include "chenruan/sector_model.hpp"

#include "doctest.h"

#include <algorithm>
#include <array>

using namespace chenruan;

TEST_CASE("degree shift") {
    for (int g : {2, 3, 7}) {
        CHECK(degree_shift(EigenvalueData({{0, 3 * g - 3}})) == 0);
        CHECK(degree_shift(EigenvalueData({{0, g - 1}, {BigRational(1, 2), 2 * (g - 1)}})) == g - 1);
    }
    CHECK(degree_shift(EigenvalueData({{BigRational(1, 2), 1}})) == BigRational(1, 2));
    CHECK(degree_shift(EigenvalueData({{BigRational(1, 3), 2}, {BigRational(2, 3), 1}})) == BigRational(4, 3));
    CHECK_THROWS_AS(EigenvalueData({{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(EigenvalueData({{BigRational(-1, 2), 1}}), std::invalid_argument);
    CHECK_THROWS_AS(EigenvalueData({{0, 0}}), std::invalid_argument);
}

TEST_CASE("eigenvalue data per label") {
    const auto nontrivial = eigen_data_for(TwoTorsionLabel::a(2, 1)).entries();
    REQUIRE(nontrivial.size() == 2);
    CHECK(nontrivial[0].fraction == 0);
    CHECK(nontrivial[0].multiplicity == 1);
    CHECK(nontrivial[1].fraction == BigRational(1, 2));
    CHECK(nontrivial[1].multiplicity == 2);

    const auto trivial = eigen_data_for(TwoTorsionLabel::zero(2)).entries();
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].multiplicity == 3);

    const auto g5 = eigen_data_for(TwoTorsionLabel::b(5, 3));
    CHECK(g5.entries()[0].multiplicity == 4);
    CHECK(g5.entries()[1].multiplicity == 8);
    CHECK(g5.total_multiplicity() == 12);

    for (int g = 2; g <= 6; ++g)
        for (const auto& l : enumerate_labels(g)) {
            const BigRational twice = 2 * degree_shift(eigen_data_for(l));
            CHECK(twice.get_den() == 1);
            CHECK(twice.get_num() % 2 == 0);
            CHECK(eigen_data_for(l).total_multiplicity() == 3 * g - 3);
        }
}

TEST_CASE("sector betti numbers") {
    CHECK(sector_betti(3, 2) == 6);
    CHECK(sector_betti(2, 1) == 0);
    CHECK(sector_betti(4, 0) == 1);
    CHECK(sector_betti(4, 7) == 0);
    CHECK(sector_betti(4, -2) == 0);
    for (int g = 2; g <= 12; ++g) {
        BigInt sum = 0;
        for (int i = 0; i <= 2 * g - 2; ++i) {
            sum += sector_betti(g, i);
            CHECK(sector_betti(g, i) == sector_betti(g, 2 * g - 2 - i));
        }
        CHECK(sum == BigInt(1) << (2 * g - 3));
    }
    const auto table = sector_betti_table(3);
    CHECK(table.dims.size() == 5);
    CHECK(table.dims.at(2) == 6);
}

TEST_CASE("sector descriptors") {
    const auto d = describe_sector(TwoTorsionLabel::a(4, 2));
    CHECK(d.shift == 3);
    CHECK(d.fixed_locus_complex_dim == 3);
    CHECK(d.covering_genus == 7);
    CHECK(d.prym_dim == 3);
    CHECK(d.w0_dim == 6);
    const auto t = describe_sector(TwoTorsionLabel::zero(4));
    CHECK(t.shift == 0);
    CHECK(t.fixed_locus_complex_dim == 9);
}

TEST_CASE("obstruction ranks vanish for every product case") {
    for (int g = 2; g <= 6; ++g) {
        const auto o = TwoTorsionLabel::zero(g);
        const auto a1 = TwoTorsionLabel::a(g, 1);
        const auto b1 = TwoTorsionLabel::b(g, 1);
        CHECK(obstruction_rank(o, o, o) == 0);
        CHECK(obstruction_rank(a1, a1, o) == 0);
        CHECK(obstruction_rank(a1, o, a1) == 0);
        CHECK(obstruction_rank(o, a1, a1) == 0);
        CHECK(obstruction_rank(a1, b1, a1 ^ b1) == 0);
        CHECK_THROWS_AS(obstruction_rank(a1, TwoTorsionLabel::a(g, 2), a1 ^ TwoTorsionLabel::a(g, 2)),
                        std::domain_error);
        CHECK_THROWS_AS(obstruction_rank(a1, b1, a1), std::invalid_argument);
    }
}

TEST_CASE("obstruction rank is symmetric in its arguments") {
    const int g = 2;
    const auto labels = enumerate_labels(g);
    for (const auto& x : labels)
        for (const auto& y : labels) {
            std::array<TwoTorsionLabel, 3> t{x, y, x ^ y};
            int reference = -1;
            try {
                reference = obstruction_rank(t[0], t[1], t[2]);
            } catch (const std::domain_error&) {
            }
            std::sort(t.begin(), t.end());
            do {
                if (reference < 0) CHECK_THROWS_AS(obstruction_rank(t[0], t[1], t[2]), std::domain_error);
                else CHECK(obstruction_rank(t[0], t[1], t[2]) == reference);
            } while (std::next_permutation(t.begin(), t.end()));
        }
}
