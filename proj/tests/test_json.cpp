#include <doctest.h>

#include "lva/json_io.hpp"
#include "lva/vertexops.hpp"

using namespace lva;

TEST_SUITE("json") {

TEST_CASE("rational round trip") {
    for (auto q : {Rational(0), Rational(7), Rational(-3, 4), Rational(22, 7)})
        CHECK(rational_from_json(rational_json(q)) == q);
    CHECK(rational_json(Rational(5)).is_number_integer());
    CHECK(rational_json(Rational(1, 2)).is_string());
}

TEST_CASE("vector round trip") {
    LatticeVector v{Rational(1), Rational(-1, 2), Rational(0)};
    CHECK(vector_from_json(vector_json(v)) == v);
}

TEST_CASE("lattice round trip") {
    auto a2 = Lattice::make({{2, -1}, {-1, 2}});
    LatticePtr back = lattice_from_json(lattice_json(*a2));
    CHECK(back->gram() == a2->gram());
    CHECK(back->det() == a2->det());
}

TEST_CASE("sympoly round trip in every basis") {
    SymPoly p = SymPoly::monomial(Basis::P, {2, 1}, Rational(3, 2)) +
                SymPoly::monomial(Basis::P, {1}, -1);
    CHECK(sympoly_from_json(sympoly_json(p)) == p);
    SymPoly h = change_basis(p, Basis::H);
    CHECK(sympoly_from_json(sympoly_json(h)) == h);
    SymPoly s = change_basis(p, Basis::S);
    CHECK(sympoly_from_json(sympoly_json(s)) == s);
}

TEST_CASE("fock round trip keeps cosets and charges") {
    auto a1 = Lattice::make({{2}});
    LatticeVector al{Rational(1)};
    FockElement u = heis_mode(al, -2, FockElement::vacuum(a1));
    u += FockElement::charge_vector(a1, al) * Rational(-5, 3);
    CHECK(fock_from_json(a1, fock_json(u)) == u);

    FockElement m = FockElement::charge_vector(a1, LatticeVector{Rational(1, 2)});
    Json j = fock_json(m);
    CHECK(vector_from_json(j.at("coset")) == m.coset());
    CHECK(fock_from_json(a1, j) == m);
}

TEST_CASE("schema version constant") {
    CHECK(std::string(kSchemaVersion) == "1");
}

} // TEST_SUITE
