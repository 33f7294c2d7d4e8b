#ifndef LVA_VERTEXOPS_HPP
#define LVA_VERTEXOPS_HPP

#include <climits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lva/fock.hpp"
#include "lva/lattice.hpp"
#include "lva/sympoly.hpp"

namespace lva {

/// Label v = a_1(-n_1)...a_k(-n_k) e^gamma of a general vertex operator.
/// All heis vectors and gamma have integer coordinates in L.
struct VertexWord {
    std::vector<std::pair<LatticeVector, int>> heis;  // (direction vector, mode >= 1)
    LatticeVector gamma;
};

/// Laurent coefficients in one formal variable.
using ZSeries = std::map<int, FockElement>;

/// Heisenberg mode action: n < 0 multiplies by alpha(n), n > 0 is the
/// contraction derivation, n = 0 reads the charge.
FockElement heis_mode(const LatticeVector& alpha, int n, const FockElement& elem);

/// Coefficient of z^{-n-1} in Y(e^alpha, z) elem. Exact, no truncation.
FockElement y_lattice_mode(const LatticeVector& alpha, int n, const FockElement& elem);

/// All coefficients of Y(e^alpha, z) elem with z-exponent in [min_exp,
/// max_exp] (exponents are bounded below, so the default covers the whole
/// finite answer up to max_exp).
ZSeries y_lattice_coeffs(const LatticeVector& alpha, const FockElement& elem, int max_exp,
                         int min_exp = INT_MIN);

/// Coefficient of z^{-n-1} in Y(v, z) elem via the 2^k normal-ordered
/// decomposition into A^- / Y(e^gamma, z) / A^+ factors.
FockElement y_general_mode(const VertexWord& v, int n, const FockElement& elem);

/// (v_n)^r elem / r!.
FockElement divided_power(const VertexWord& v, int n, int r, const FockElement& elem);

/// Garland symmetric function h^{[k]}_{-n} in the H basis; the H
/// coefficients are integers.
SymPoly garland_poly(int k, int n);

/// Multiplication by garland_poly(k, n) instantiated in basis direction dir
/// (0-based).
FockElement garland_apply(int dir, int k, int n, const FockElement& elem);

struct CapExceededError : std::runtime_error {
    CapExceededError(std::string msg, FockElement partial_sum)
        : std::runtime_error(std::move(msg)), partial(std::move(partial_sum)) {}
    FockElement partial;
};

/// sum_r divided_power(v, n, r, elem) t^r, summed until the first zero
/// summand; throws CapExceededError if nilpotence does not kick in by cap.
FockElement exp_mode(const VertexWord& v, int n, const Integer& t, const FockElement& elem,
                     int cap);

/// Binomial weight of the A^+/A^- mode decompositions: for '+' at index
/// n >= 0 it is (-1)^{m-1} C(n+m-1, m-1); for '-' at n >= 1 it is
/// C(n-1, m-1). Out-of-range indices give 0.
Integer a_mode_coeff(char sign, int m, int n);

// Building blocks shared with the oracle checks.

/// E^+(-alpha, z) elem collected by the z exponent -j, j >= 0.
std::map<int, FockElement> eplus_apply(const LatticeVector& alpha, const FockElement& elem);

/// Multiplication by alpha(-n), n >= 1.
FockElement multiply_creation(const LatticeVector& alpha, int n, const FockElement& elem);

/// h_k of the alpha-alphabet (coefficients of E^-(-alpha, z)) as a
/// charge-free polynomial: monomial -> coefficient, for k = 0..kmax.
std::vector<std::map<PSMonomial, Rational>> h_series(const LatticePtr& lattice,
                                                     const LatticeVector& alpha, int kmax);

/// A^+_{alpha,m}(z) applied to a Laurent series of elements.
ZSeries a_plus_apply(const LatticeVector& alpha, int m, const ZSeries& series);

/// A^-_{alpha,m}(z) applied to a Laurent series, keeping exponents <= max_exp.
ZSeries a_minus_apply(const LatticeVector& alpha, int m, const ZSeries& series, int max_exp);

} // namespace lva

#endif
