#pragma once

#include "chenruan/exact_arith.hpp"
#include "chenruan/gamma_group.hpp"

#include <map>
#include <vector>

namespace chenruan {

/// One eigenvalue exp(2 pi i a) of the linearized action, with multiplicity.
struct Eigenvalue {
    BigRational fraction;  // a in [0, 1)
    int multiplicity;      // > 0
};

/// Eigenvalue spectrum of a group element on the tangent space at a fixed point.
class EigenvalueData {
public:
    /// Throws std::invalid_argument if a fraction leaves [0,1) or a
    /// multiplicity is not positive.
    explicit EigenvalueData(std::vector<Eigenvalue> entries);

    const std::vector<Eigenvalue>& entries() const { return entries_; }
    int total_multiplicity() const;

private:
    std::vector<Eigenvalue> entries_;
};

/// Age: sum of a_j * m_j.
BigRational degree_shift(const EigenvalueData& data);

/// Spectrum of tensoring by L on the (3g-3)-dimensional tangent space:
/// identity for trivial L, otherwise +1 with multiplicity g-1 and -1 with
/// multiplicity 2(g-1).
EigenvalueData eigen_data_for(const TwoTorsionLabel& label);

/// d_g(i): dimension of the degree-i part of a twisted sector's cohomology,
/// C(2g-2, i) for even i in [0, 2g-2] and zero otherwise.
BigInt sector_betti(int g, int i);

struct SectorBettiTable {
    int g;
    std::map<int, BigInt> dims;  // internal degree -> d_g(i), all i in [0, 2g-2]
};

SectorBettiTable sector_betti_table(int g);

struct SectorDescriptor {
    TwoTorsionLabel label;
    BigRational shift;
    int fixed_locus_complex_dim;
    int covering_genus;
    int prym_dim;
    int w0_dim;
};

SectorDescriptor describe_sector(const TwoTorsionLabel& label);

/// Complex dimension of S(L1) ∩ S(L2) ∩ S(L3).  Throws std::domain_error if
/// the intersection is empty.
int triple_locus_dim(const TwoTorsionLabel& l1, const TwoTorsionLabel& l2, const TwoTorsionLabel& l3);

/// Rank of the obstruction bundle over the triple intersection:
/// dim S - (3g-3) + sum of shifts, in complex dimensions.  Requires
/// l3 == l1 ^ l2 (std::invalid_argument) and a nonempty intersection
/// (std::domain_error).
int obstruction_rank(const TwoTorsionLabel& l1, const TwoTorsionLabel& l2, const TwoTorsionLabel& l3);

}  // namespace chenruan
