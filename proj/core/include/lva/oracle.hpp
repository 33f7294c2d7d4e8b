#ifndef LVA_ORACLE_HPP
#define LVA_ORACLE_HPP

#include <map>
#include <vector>

#include "lva/fock.hpp"
#include "lva/lattice.hpp"
#include "lva/rational.hpp"
#include "lva/vertexops.hpp"

namespace lva {

/// Per-variable exponent bounds [lo_i, hi_i].
struct Window {
    std::vector<int> lo, hi;
    int vars() const { return static_cast<int>(lo.size()); }
    bool contains(const std::vector<int>& e) const;
    static Window uniform(int nvars, int lo, int hi);
};

/// Truncated multivariate Laurent polynomial over exact rationals. Products
/// drop monomials that leave the window and mark the result clipped.
class MultiLaurent {
public:
    using Terms = std::map<std::vector<int>, Rational>;

    explicit MultiLaurent(Window w) : window_(std::move(w)) {}

    const Window& window() const { return window_; }
    const Terms& terms() const { return terms_; }
    bool clipped() const { return clipped_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& expo, const Rational& c);
    Rational coeff(const std::vector<int>& expo) const;

    MultiLaurent operator+(const MultiLaurent& rhs) const;
    MultiLaurent operator*(const MultiLaurent& rhs) const;
    MultiLaurent& operator*=(const Rational& c);

    /// Action of a variable permutation: f(z_{sigma^{-1}(1)}, ...).
    MultiLaurent permute(const std::vector<int>& sigma) const;

private:
    Window window_;
    Terms terms_;
    bool clipped_ = false;
};

/// prod_{i<j} (z_i - z_j)^k expanded exactly; rejects windows that cannot
/// hold every monomial.
MultiLaurent vandermonde_pow(int r, int k, const Window& window);

struct DivisibilityResult {
    Rational coefficient;
    bool divisible;
};

/// Coefficient of (z_1...z_r)^n in prod (z_i - z_j)^k G and its
/// divisibility by r!; rejects non-symmetric G.
DivisibilityResult lemma_divisibility(const MultiLaurent& g, int r, int k, int n);

/// Checks the r-fold product formula for Y(e^alpha, z_1)...Y(e^alpha, z_r)
/// against independent expansion of the closed form, on the window
/// w-exponents in [0, w_hi] and z-exponents <= z_hi. beta_list labels the
/// E^-(-beta_s, w_s) factors; the target charge is eta = sum beta_s.
bool product_formula_check(const LatticePtr& lattice, const LatticeVector& alpha, int r,
                           const std::vector<LatticeVector>& beta_list, int w_hi, int z_hi);

/// E^+(-alpha,z) E^-(-beta,w) = E^-(-beta,w) E^+(-alpha,z) (1-w/z)^{<a,b>},
/// applied to the monomial basis of degree <= w_hi.
bool contraction_check(const LatticePtr& lattice, const LatticeVector& alpha,
                       const LatticeVector& beta, int w_hi);

/// The [A^+_m(z), A^-_n(w)] commutator series, verified on sample elements
/// for w-exponents <= w_hi.
bool wick_commutator_check(const LatticePtr& lattice, const LatticeVector& alpha,
                           const LatticeVector& beta, int m, int n, int w_hi);

/// Annihilator-product identity: A^+ factors acting on a product of E^-
/// generating series equal multiplication by the contraction function.
bool lemma41_check(const LatticePtr& lattice,
                   const std::vector<std::pair<LatticeVector, int>>& alpha_modes,
                   const std::vector<LatticeVector>& beta_list, int w_hi);

/// A^+ factors across Y(e^beta, w) pick up (z-w)^{-lambda_p} corrections
/// (expansion in w).
bool lemma43_plus_check(const LatticePtr& lattice,
                        const std::vector<std::pair<LatticeVector, int>>& alpha_modes,
                        const LatticeVector& beta, const FockElement& sample, int w_hi);

/// Y(e^beta, w) across A^- factors picks up -(w-z)^{-lambda_p} corrections
/// (expansion in z).
bool lemma43_minus_check(const LatticePtr& lattice,
                         const std::vector<std::pair<LatticeVector, int>>& alpha_modes,
                         const LatticeVector& beta, const FockElement& sample, int w_hi,
                         int z_hi);

} // namespace lva

#endif
