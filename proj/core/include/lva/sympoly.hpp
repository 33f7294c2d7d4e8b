#ifndef LVA_SYMPOLY_HPP
#define LVA_SYMPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "lva/partition.hpp"
#include "lva/rational.hpp"

namespace lva {

enum class Basis { P, H, S };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

/// Symmetric function in one alphabet, stored as a sparse sum of basis
/// monomials with exact rational coefficients. A monomial is indexed by a
/// partition: p_lambda, h_lambda, or a single Schur function s_lambda
/// depending on the basis tag. Terms of mixed degree are permitted.
class SymPoly {
public:
    using Terms = std::map<Partition, Rational>;

    explicit SymPoly(Basis b = Basis::P) : basis_(b) {}
    SymPoly(Basis b, Terms t) : basis_(b), terms_(std::move(t)) { prune(); }

    static SymPoly zero(Basis b) { return SymPoly(b); }
    static SymPoly one(Basis b) { return monomial(b, Partition{}, 1); }
    static SymPoly monomial(Basis b, const Partition& key, const Rational& c);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;

    Rational coeff(const Partition& key) const;
    void add_term(const Partition& key, const Rational& c);

    SymPoly& operator+=(const SymPoly& rhs);
    SymPoly& operator-=(const SymPoly& rhs);
    SymPoly& operator*=(const Rational& c);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
    SymPoly operator*(const SymPoly& rhs) const;

    bool operator==(const SymPoly& rhs) const;

    /// True iff every coefficient is an integer.
    bool is_integral() const;

    /// Rendering like "2*h[2] - h[1]^2".
    std::string to_string() const;

private:
    void prune();
    Basis basis_;
    Terms terms_;
};

/// h_n expanded in power sums; denominators divide n!.
SymPoly h_in_p(int n);

/// p_n as an integer polynomial in h_1..h_n (Newton recurrence).
SymPoly p_in_h(int n);

/// s_lambda as an integer polynomial in h's, via the Jacobi-Trudi
/// determinant with h_0 = 1 and h_m = 0 for m < 0.
SymPoly jacobi_trudi(const Partition& lambda);

/// Re-expresses f in the target basis; mathematically the identity.
SymPoly change_basis(const SymPoly& f, Basis target);

/// Matrix whose column lambda is the target-basis expansion of the
/// from-basis element indexed by lambda, over partitions_of(deg) in their
/// canonical order. For the (H,S) pairs the entries are integers and the
/// determinant is +-1.
std::vector<std::vector<Rational>> transition_matrix(int deg, Basis from, Basis to);

/// Exact determinant by rational Gaussian elimination.
Rational matrix_det(std::vector<std::vector<Rational>> m);

/// Mode S(alpha)_m of the Schur vertex operator
/// S(alpha,z) = E^-(-alpha,z) E^+(-alpha/2,z) on one alphabet, with the
/// norm-2 normalization: alpha(n) acts as 2n d/dp_n for n > 0 and as
/// multiplication by p_{-n} for n < 0. Input is converted to the P basis.
SymPoly bernstein_mode(int m, const SymPoly& f);

/// s_lambda built as S(alpha)_{-lambda_1} ... S(alpha)_{-lambda_l} . 1
/// (result in the P basis).
SymPoly schur_by_vertex(const Partition& lambda);

} // namespace lva

#endif
