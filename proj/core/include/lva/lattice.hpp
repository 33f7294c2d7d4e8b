#ifndef LVA_LATTICE_HPP
#define LVA_LATTICE_HPP

#include <memory>
#include <vector>

#include "lva/rational.hpp"

namespace lva {

/// Coordinates in the fixed Z-basis of L. Integer entries for elements of
/// L, rationals for elements of the dual.
using LatticeVector = std::vector<Rational>;

bool is_integral_vector(const LatticeVector& v);
LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector scale(const LatticeVector& a, const Rational& c);
LatticeVector zero_vector(int rank);

/// Even non-degenerate integral lattice with a fixed Z-basis, the Gram
/// matrix of its bilinear form, and the standard bimultiplicative 2-cocycle
/// section: epsilon(e_i, e_j) = +1 for i <= j and (-1)^{<e_i,e_j>} for
/// i > j.
class Lattice {
public:
    static std::shared_ptr<const Lattice> make(std::vector<std::vector<Integer>> gram);

    int rank() const { return rank_; }
    const std::vector<std::vector<Integer>>& gram() const { return gram_; }
    Integer det() const { return det_; }

    Rational pairing(const LatticeVector& u, const LatticeVector& v) const;

    /// Cocycle sign on L x L; rejects non-integer coordinates.
    int epsilon(const LatticeVector& u, const LatticeVector& v) const;

    /// True iff <gamma, e_i> is an integer for every basis vector.
    bool dual_membership(const LatticeVector& gamma) const;

    /// |det G| coset representatives of the dual modulo L, each with
    /// coordinates in [0,1), sorted lexicographically.
    std::vector<LatticeVector> dual_coset_reps() const;

private:
    Lattice(std::vector<std::vector<Integer>> gram, Integer det);
    int rank_;
    std::vector<std::vector<Integer>> gram_;
    Integer det_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

} // namespace lva

#endif
