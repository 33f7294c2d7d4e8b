#include <doctest.h>

#include "lva/vertexops.hpp"

using namespace lva;

namespace {

struct A1 {
    LatticePtr lat = Lattice::make({{2}});
    LatticeVector al{Rational(1)};
    FockElement one = FockElement::vacuum(lat);
    FockElement e(int k) const {
        return FockElement::charge_vector(lat, LatticeVector{Rational(k)});
    }
};

} // namespace

TEST_SUITE("vertexops") {

TEST_CASE("heis_mode pinned values") {
    A1 f;
    FockElement created = heis_mode(f.al, -1, f.one);
    CHECK(created.terms().size() == 1);
    CHECK(created.max_degree() == 1);
    CHECK(heis_mode(f.al, 1, created) == f.one * Rational(2));
    CHECK(heis_mode(f.al, 0, f.e(1)) == f.e(1) * Rational(2));
    CHECK(heis_mode(f.al, 2, created).is_zero());
}

TEST_CASE("y_lattice_mode pinned values") {
    A1 f;
    CHECK(y_lattice_mode(f.al, -1, f.one) == f.e(1));
    CHECK(y_lattice_mode(f.al, -2, f.one) == heis_mode(f.al, -1, f.e(1)));
    CHECK(y_lattice_mode(f.al, 1, f.e(-1)) == f.one);
    CHECK(y_lattice_mode(f.al, 0, f.one).is_zero());
}

TEST_CASE("y_lattice_coeffs window agrees with single modes") {
    A1 f;
    ZSeries s = y_lattice_coeffs(f.al, heis_mode(f.al, -2, f.one), 3);
    for (int e = -3; e <= 3; ++e) {
        FockElement direct = y_lattice_mode(f.al, -e - 1, heis_mode(f.al, -2, f.one));
        auto it = s.find(e);
        if (it == s.end())
            CHECK(direct.is_zero());
        else
            CHECK(it->second == direct);
    }
}

TEST_CASE("y_general_mode reduces to the lattice operator when k = 0") {
    A1 f;
    VertexWord v{{}, f.al};
    FockElement u = heis_mode(f.al, -1, f.e(-1));
    for (int n = -3; n <= 3; ++n)
        CHECK(y_general_mode(v, n, u) == y_lattice_mode(f.al, n, u));
}

TEST_CASE("y_general_mode with gamma = 0 is the Heisenberg field") {
    A1 f;
    VertexWord v{{{f.al, 1}}, zero_vector(1)};
    FockElement u = heis_mode(f.al, -2, f.e(1));
    CHECK(y_general_mode(v, -1, u) == heis_mode(f.al, -1, u));
    CHECK(y_general_mode(v, 1, u) == heis_mode(f.al, 1, u));
}

TEST_CASE("y_general_mode on a charged word matches the normal-ordered product") {
    A1 f;
    VertexWord v{{{f.al, 1}}, f.al};
    // :alpha(z)Y(e^a,z): 1 has no annihilation contribution on the vacuum
    FockElement want = heis_mode(f.al, -2, f.e(1)) +
                       heis_mode(f.al, -1, heis_mode(f.al, -1, f.e(1)));
    CHECK(y_general_mode(v, -2, f.one) == want);
}

TEST_CASE("divided_power pinned values") {
    A1 f;
    VertexWord v{{}, f.al};
    CHECK(divided_power(v, -1, 2, f.one).is_zero());
    CHECK(divided_power(v, -2, 2, f.one) == f.e(2) * Rational(-1));
    FockElement u = heis_mode(f.al, -1, f.e(-1));
    CHECK(divided_power(v, 0, 1, u) == y_general_mode(v, 0, u));
    CHECK_THROWS_AS(divided_power(v, -1, 0, u), std::invalid_argument);
}

TEST_CASE("garland_poly pinned values") {
    SymPoly h2 = SymPoly::monomial(Basis::H, {2}, 1);
    SymPoly h11 = SymPoly::monomial(Basis::H, {1, 1}, 1);
    CHECK(garland_poly(1, 3) == SymPoly::monomial(Basis::H, {3}, 1));
    CHECK(garland_poly(2, 1) == h2 * Rational(2) - h11);
    CHECK(garland_poly(4, 0) == SymPoly::one(Basis::H));

    SymPoly p2 = SymPoly::monomial(Basis::P, {2}, 1);
    SymPoly p4 = SymPoly::monomial(Basis::P, {4}, 1);
    CHECK(change_basis(garland_poly(2, 2), Basis::P) == (p2 * p2 + p4) * Rational(1, 2));
}

TEST_CASE("garland H coefficients are integers") {
    for (int k = 1; k <= 4; ++k)
        for (int n = 0; n <= 6; ++n) {
            SymPoly g = garland_poly(k, n);
            for (auto& [key, c] : g.terms()) CHECK(denominator(c) == 1);
        }
}

TEST_CASE("garland_apply pinned values") {
    A1 f;
    CHECK(garland_apply(0, 1, 1, f.one) == heis_mode(f.al, -1, f.one));
    CHECK(garland_apply(0, 2, 1, f.one) == heis_mode(f.al, -2, f.one));
    FockElement u = heis_mode(f.al, -3, f.e(1));
    CHECK(garland_apply(0, 3, 0, u) == u);
}

TEST_CASE("a_mode_coeff table") {
    CHECK(a_mode_coeff('+', 1, 0) == 1);
    CHECK(a_mode_coeff('-', 2, 3) == 2);
    CHECK(a_mode_coeff('+', 2, 1) == -2);
    CHECK(a_mode_coeff('-', 1, 0) == 0);
    CHECK(a_mode_coeff('+', 3, -1) == 0);
}

TEST_CASE("exp_mode pinned values and inverse") {
    A1 f;
    VertexWord v{{}, f.al};
    for (Integer t : {Integer(1), Integer(-2)})
        CHECK(exp_mode(v, 1, t, f.e(-1), 10) == f.e(-1) + f.one * Rational(t));
    FockElement u = heis_mode(f.al, -2, f.e(-1));
    CHECK(exp_mode(v, 1, 0, u, 10) == u);
    FockElement fwd = exp_mode(v, -1, 1, u, 32);
    CHECK(exp_mode(v, -1, -1, fwd, 32) == u);
}

TEST_CASE("exp_mode reports cap overflow with a partial sum") {
    A1 f;
    VertexWord creation{{{f.al, 1}}, zero_vector(1)};
    CHECK_THROWS_AS(exp_mode(creation, -1, 1, f.one, 4), CapExceededError);
    try {
        exp_mode(creation, -1, 1, f.one, 4);
    } catch (const CapExceededError& e) {
        CHECK_FALSE(e.partial.is_zero());
    }
}

} // TEST_SUITE
