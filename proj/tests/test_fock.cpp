#include <doctest.h>

#include "lva/fock.hpp"
#include "lva/vertexops.hpp"

using namespace lva;

namespace {

Rational hcoeff(const HBasisExpansion& h, std::vector<std::pair<int, Partition>> dirs,
                const LatticeVector& charge) {
    auto it = h.find(HBasisKey{std::move(dirs), charge});
    return it == h.end() ? Rational(0) : it->second;
}

} // namespace

TEST_SUITE("fock") {

TEST_CASE("vacuum and charge vectors") {
    auto a1 = Lattice::make({{2}});
    FockElement one = FockElement::vacuum(a1);
    REQUIRE(one.terms().size() == 1);
    auto h = to_h_basis(one);
    REQUIRE(h.size() == 1);
    CHECK(hcoeff(h, {}, zero_vector(1)) == 1);
    FockElement ea = FockElement::charge_vector(a1, LatticeVector{Rational(1)});
    CHECK(is_integral_vector(ea.coset()));
    CHECK_THROWS_AS(FockElement::charge_vector(a1, LatticeVector{Rational(1, 3)}),
                    std::invalid_argument);
}

TEST_CASE("to_h_basis pinned expansions") {
    auto a1 = Lattice::make({{2}});
    FockElement one = FockElement::vacuum(a1);
    LatticeVector al{Rational(1)};
    auto h1 = to_h_basis(heis_mode(al, -1, one));
    REQUIRE(h1.size() == 1);
    CHECK(hcoeff(h1, {{0, Partition({1})}}, zero_vector(1)) == 1);

    auto h2 = to_h_basis(heis_mode(al, -2, one));
    REQUIRE(h2.size() == 2);
    CHECK(hcoeff(h2, {{0, Partition({2})}}, zero_vector(1)) == 2);
    CHECK(hcoeff(h2, {{0, Partition({1, 1})}}, zero_vector(1)) == -1);
}

TEST_CASE("h-basis round trip") {
    auto a2 = Lattice::make({{2, -1}, {-1, 2}});
    FockElement u = FockElement::vacuum(a2);
    u = heis_mode(LatticeVector{Rational(1), Rational(0)}, -2, u);
    u = heis_mode(LatticeVector{Rational(0), Rational(1)}, -3, u);
    u += FockElement::charge_vector(a2, LatticeVector{Rational(1), Rational(1)});
    CHECK(from_h_basis(a2, zero_vector(2), to_h_basis(u)) == u);
}

TEST_CASE("integrality verdicts") {
    auto a1 = Lattice::make({{2}});
    FockElement one = FockElement::vacuum(a1);
    LatticeVector al{Rational(1)};
    CHECK(integrality_check(one).integral);
    CHECK(integrality_check(heis_mode(al, -2, one)).integral);
    FockElement half = heis_mode(al, -1, one) * Rational(1, 2);
    auto v = integrality_check(half);
    CHECK_FALSE(v.integral);
    CHECK(v.witness_coeff == Rational(1, 2));
}

TEST_CASE("grade gives conformal weight and charge") {
    auto a1 = Lattice::make({{2}});
    LatticeVector al{Rational(1)};
    FockElement x = heis_mode(al, -1, FockElement::charge_vector(a1, al));
    auto g = grade(x);
    REQUIRE(g.size() == 1);
    CHECK(g.begin()->first.weight == 2);
    CHECK(g.begin()->first.charge == al);

    auto gv = grade(FockElement::vacuum(a1));
    CHECK(gv.begin()->first.weight == 0);

    FockElement mod = FockElement::charge_vector(a1, LatticeVector{Rational(1, 2)});
    CHECK(grade(mod).begin()->first.weight == Rational(1, 4));

    // mixed element splits and sums back
    FockElement mix = x + FockElement::vacuum(a1);
    auto parts = grade(mix);
    CHECK(parts.size() == 2);
    FockElement back(a1, zero_vector(1));
    for (auto& [key, piece] : parts) back += piece;
    CHECK(back == mix);
}

TEST_CASE("reduce_mod_p") {
    auto a1 = Lattice::make({{2}});
    FockElement one = FockElement::vacuum(a1);
    LatticeVector al{Rational(1)};

    // alpha(-2) 1 = 2 h_2 - h_1^2 == h_1^2 mod 2
    FockElement r2 = reduce_mod_p(heis_mode(al, -2, one), 2);
    auto h = to_h_basis(r2);
    REQUIRE(h.size() == 1);
    CHECK(hcoeff(h, {{0, Partition({1, 1})}}, zero_vector(1)) == 1);

    CHECK(reduce_mod_p(one, 5) == one);
    CHECK(reduce_mod_p(heis_mode(al, -1, one) * Rational(3), 3).is_zero());
    CHECK_THROWS_AS(reduce_mod_p(heis_mode(al, -1, one) * Rational(1, 2), 2),
                    std::invalid_argument);
}

TEST_CASE("coset elements track charges in L + gamma") {
    auto a1 = Lattice::make({{2}});
    LatticeVector half{Rational(1, 2)};
    FockElement m = FockElement::charge_vector(a1, half);
    CHECK(m.coset() == half);
    CHECK_THROWS_AS(m.add_term(PSMonomial{}, zero_vector(1), 1), std::invalid_argument);
    m.add_term(PSMonomial{}, LatticeVector{Rational(3, 2)}, 1);
    CHECK(m.terms().size() == 2);
}

TEST_CASE("monomial ordering invariants") {
    PSMonomial m({{0, 2, 1}, {0, 1, 1}, {0, 2, 1}});
    CHECK(m.factors().size() == 2);  // equal factors merge
    CHECK(m.degree() == 5);
    CHECK(m.max_mode() == 2);
    CHECK_THROWS_AS(PSMonomial({{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(PSMonomial({{0, 1, 0}}), std::invalid_argument);
}

} // TEST_SUITE
