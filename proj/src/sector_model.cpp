#include "chenruan/sector_model.hpp"

#include <algorithm>
#include <numeric>

namespace chenruan {

EigenvalueData::EigenvalueData(std::vector<Eigenvalue> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.fraction < 0 || e.fraction >= 1) throw std::invalid_argument("eigenvalue fraction outside [0,1)");
        if (e.multiplicity <= 0) throw std::invalid_argument("eigenvalue multiplicity must be positive");
    }
}

int EigenvalueData::total_multiplicity() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0,
                           [](int acc, const Eigenvalue& e) { return acc + e.multiplicity; });
}

BigRational degree_shift(const EigenvalueData& data) {
    BigRational shift = 0;
    for (const auto& e : data.entries()) shift += e.fraction * e.multiplicity;
    return shift;
}

EigenvalueData eigen_data_for(const TwoTorsionLabel& label) {
    const int g = label.genus();
    if (label.is_trivial()) return EigenvalueData({{0, 3 * g - 3}});
    return EigenvalueData({{0, g - 1}, {BigRational(1, 2), 2 * (g - 1)}});
}

BigInt sector_betti(int g, int i) {
    require_genus(g);
    if (i < 0 || i > 2 * g - 2 || i % 2 != 0) return 0;
    return binomial(2 * g - 2, i);
}

SectorBettiTable sector_betti_table(int g) {
    SectorBettiTable table{g, {}};
    for (int i = 0; i <= 2 * g - 2; ++i) table.dims[i] = sector_betti(g, i);
    return table;
}

SectorDescriptor describe_sector(const TwoTorsionLabel& label) {
    const int g = label.genus();
    const bool trivial = label.is_trivial();
    return SectorDescriptor{
        .label = label,
        .shift = degree_shift(eigen_data_for(label)),
        .fixed_locus_complex_dim = trivial ? 3 * g - 3 : g - 1,
        .covering_genus = 2 * g - 1,
        .prym_dim = g - 1,
        .w0_dim = 2 * (g - 1),
    };
}

int triple_locus_dim(const TwoTorsionLabel& l1, const TwoTorsionLabel& l2, const TwoTorsionLabel& l3) {
    const int g = l1.genus();
    const TwoTorsionLabel labels[] = {l1, l2, l3};
    std::vector<TwoTorsionLabel> nontrivial;
    for (const auto& l : labels)
        if (!l.is_trivial() && std::find(nontrivial.begin(), nontrivial.end(), l) == nontrivial.end())
            nontrivial.push_back(l);

    if (nontrivial.empty()) return 3 * g - 3;
    if (nontrivial.size() == 1) return g - 1;
    // Pairwise-distinct loci: any disjoint pair empties the intersection; a
    // point set is already zero-dimensional.
    for (std::size_t i = 0; i < nontrivial.size(); ++i)
        for (std::size_t j = i + 1; j < nontrivial.size(); ++j)
            if (fixed_locus_relation(nontrivial[i], nontrivial[j]).kind == LocusRelation::Disjoint)
                throw std::domain_error("fixed loci of " + nontrivial[i].str() + " and " + nontrivial[j].str() +
                                        " do not meet");
    return 0;
}

int obstruction_rank(const TwoTorsionLabel& l1, const TwoTorsionLabel& l2, const TwoTorsionLabel& l3) {
    if ((l1 ^ l2) != l3) throw std::invalid_argument("third label must be the product of the first two");
    const int g = l1.genus();
    const BigRational rank = triple_locus_dim(l1, l2, l3) - (3 * g - 3) + degree_shift(eigen_data_for(l1)) +
                             degree_shift(eigen_data_for(l2)) + degree_shift(eigen_data_for(l3));
    if (rank.get_den() != 1 || rank < 0) throw std::logic_error("obstruction rank " + to_string(rank) + " is invalid");
    return static_cast<int>(rank.get_num().get_si());
}

}  // namespace chenruan
