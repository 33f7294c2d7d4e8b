#ifndef LVA_FOCK_HPP
#define LVA_FOCK_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lva/lattice.hpp"
#include "lva/partition.hpp"
#include "lva/rational.hpp"
#include "lva/sympoly.hpp"

namespace lva {

/// Product of creation modes e_i(-n)^e over the basis directions, stored as
/// sorted (direction, mode, exponent) triples with direction 0-based.
class PSMonomial {
public:
    struct Factor {
        int dir;
        int mode;
        int exp;
        auto operator<=>(const Factor&) const = default;
    };

    PSMonomial() = default;
    explicit PSMonomial(std::vector<Factor> f);

    const std::vector<Factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    int degree() const;
    int max_mode() const;

    PSMonomial times(int dir, int mode) const;

    auto operator<=>(const PSMonomial&) const = default;

private:
    std::vector<Factor> factors_;
};

/// Per-direction partitions of h-modes plus a charge; the canonical
/// integral basis key.
struct HBasisKey {
    std::vector<std::pair<int, Partition>> dirs;  // sorted by direction, non-empty partitions
    LatticeVector charge;
    auto operator<=>(const HBasisKey&) const = default;
};

using HBasisExpansion = std::map<HBasisKey, Rational>;

struct IntegralityVerdict {
    bool integral;
    HBasisKey witness_key;     // set when not integral
    Rational witness_coeff;
};

/// Strict weak order on term keys that compares charges by raw
/// (numerator, denominator) parts; numeric rational comparison does bignum
/// division and dominates profiles when used as a map comparator.
struct TermKeyLess {
    static int cmp(const Rational& a, const Rational& b) {
        int c = numerator(a).compare(numerator(b));
        return c ? c : denominator(a).compare(denominator(b));
    }
    bool operator()(const std::pair<PSMonomial, LatticeVector>& a,
                    const std::pair<PSMonomial, LatticeVector>& b) const {
        if (auto c = a.first <=> b.first; c != 0) return c < 0;
        if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
        for (std::size_t i = 0; i < a.second.size(); ++i)
            if (int c = cmp(a.second[i], b.second[i])) return c < 0;
        return false;
    }
};

/// Element of V_L or of the module V_{L+gamma}: finite rational combination
/// of (power-sum monomial, charge) pairs, all charges congruent to the coset
/// tag mod L.
class FockElement {
public:
    using Key = std::pair<PSMonomial, LatticeVector>;
    using Terms = std::map<Key, Rational, TermKeyLess>;

    FockElement() = default;
    FockElement(LatticePtr lattice, LatticeVector coset);

    static FockElement vacuum(LatticePtr lattice);
    /// Pure charge vector e^charge in the coset of charge.
    static FockElement charge_vector(LatticePtr lattice, const LatticeVector& charge);

    const LatticePtr& lattice() const { return lattice_; }
    const LatticeVector& coset() const { return coset_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;

    void add_term(const PSMonomial& mono, const LatticeVector& charge, const Rational& c);

    FockElement& operator+=(const FockElement& rhs);
    FockElement& operator-=(const FockElement& rhs);
    FockElement& operator*=(const Rational& c);
    friend FockElement operator+(FockElement a, const FockElement& b) { return a += b; }
    friend FockElement operator-(FockElement a, const FockElement& b) { return a -= b; }
    friend FockElement operator*(FockElement a, const Rational& c) { return a *= c; }
    bool operator==(const FockElement& rhs) const;

private:
    void check_charge(const LatticeVector& charge) const;
    LatticePtr lattice_;
    LatticeVector coset_;
    Terms terms_;
};

/// Expansion in the per-direction complete-homogeneous basis.
HBasisExpansion to_h_basis(const FockElement& elem);

/// Inverse of to_h_basis.
FockElement from_h_basis(const LatticePtr& lattice, const LatticeVector& coset,
                         const HBasisExpansion& h);

/// Integral iff every h-basis coefficient is an integer.
IntegralityVerdict integrality_check(const FockElement& elem);

struct GradeKey {
    Rational weight;        // monomial degree + <charge,charge>/2
    LatticeVector charge;
    bool operator==(const GradeKey& o) const {
        return weight == o.weight && charge == o.charge;
    }
    bool operator<(const GradeKey& o) const {
        if (weight != o.weight) return weight < o.weight;
        return charge < o.charge;
    }
};

/// Splits the element by (conformal weight, charge); the pieces sum back to
/// the input.
std::map<GradeKey, FockElement> grade(const FockElement& elem);

/// Reduces the h-basis coefficients mod p and re-expands. Rejects
/// non-integral input.
FockElement reduce_mod_p(const FockElement& elem, int p);

/// h-basis coefficients reduced to residues in [0, p).
HBasisExpansion reduce_mod_p_h(const FockElement& elem, int p);

} // namespace lva

#endif
