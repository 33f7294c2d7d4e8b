#include <doctest.h>

#include "lva/oracle.hpp"
#include "lva/vertexops.hpp"

using namespace lva;

TEST_SUITE("oracle") {

TEST_CASE("vandermonde_pow pinned expansions") {
    Window w2 = Window::uniform(2, -4, 4);
    MultiLaurent v21 = vandermonde_pow(2, 1, w2);
    CHECK(v21.terms().size() == 2);
    CHECK(v21.coeff({1, 0}) == 1);
    CHECK(v21.coeff({0, 1}) == -1);

    MultiLaurent v22 = vandermonde_pow(2, 2, w2);
    CHECK(v22.coeff({2, 0}) == 1);
    CHECK(v22.coeff({1, 1}) == -2);
    CHECK(v22.coeff({0, 2}) == 1);

    MultiLaurent v31 = vandermonde_pow(3, 1, Window::uniform(3, 0, 2));
    CHECK(v31.terms().size() == 6);
    CHECK(v31.coeff({2, 1, 0}) == 1);
    CHECK(v31.coeff({0, 1, 2}) == -1);  // reversal has 3 inversions
    CHECK(v31.coeff({2, 0, 1}) == -1);

    CHECK_THROWS_AS(vandermonde_pow(2, 2, Window::uniform(2, 0, 1)), std::invalid_argument);
}

TEST_CASE("laurent window clipping and permutation") {
    Window w = Window::uniform(2, 0, 1);
    MultiLaurent f(w), g(w);
    f.add_term({1, 0}, 1);
    g.add_term({1, 0}, 1);
    g.add_term({0, 1}, 1);
    MultiLaurent prod = f * g;
    CHECK(prod.clipped());        // z1^2 fell outside
    CHECK(prod.coeff({1, 1}) == 1);
    MultiLaurent swapped = f.permute({1, 0});
    CHECK(swapped.coeff({0, 1}) == 1);
    CHECK(swapped.coeff({1, 0}) == 0);
}

TEST_CASE("lemma_divisibility pinned values") {
    auto one_of = [](int r, int lo, int hi) {
        MultiLaurent g(Window::uniform(r, lo, hi));
        g.add_term(std::vector<int>(r, 0), 1);
        return g;
    };
    auto d1 = lemma_divisibility(one_of(2, -4, 4), 2, 1, 0);
    CHECK(d1.divisible);
    CHECK(d1.coefficient == 0);
    auto d2 = lemma_divisibility(one_of(2, -4, 4), 2, 2, 1);
    CHECK(d2.divisible);
    CHECK(d2.coefficient == -2);
    auto d3 = lemma_divisibility(one_of(3, -6, 6), 3, 2, 2);
    CHECK(d3.divisible);
    CHECK(d3.coefficient == -6);

    MultiLaurent bad(Window::uniform(2, -2, 2));
    bad.add_term({1, 0}, 1);  // not symmetric
    CHECK_THROWS_AS(lemma_divisibility(bad, 2, 1, 0), std::invalid_argument);
}

TEST_CASE("contraction identity on small lattices") {
    auto a1 = Lattice::make({{2}});
    auto a2 = Lattice::make({{2, -1}, {-1, 2}});
    auto ortho = Lattice::make({{2, 0}, {0, 4}});
    LatticeVector al{Rational(1)};
    CHECK(contraction_check(a1, al, al, 4));
    CHECK(contraction_check(a2, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}, 4));
    CHECK(contraction_check(ortho, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}, 4));
}

TEST_CASE("wick commutator identity") {
    auto a1 = Lattice::make({{2}});
    LatticeVector al{Rational(1)};
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
            CHECK(wick_commutator_check(a1, al, al, m, n, 4));
    auto ortho = Lattice::make({{2, 0}, {0, 4}});
    CHECK(wick_commutator_check(ortho, {Rational(1), Rational(0)}, {Rational(0), Rational(1)},
                                2, 1, 4));
}

TEST_CASE("annihilator product lemma") {
    auto a1 = Lattice::make({{2}});
    LatticeVector al{Rational(1)};
    CHECK(lemma41_check(a1, {{al, 1}}, {al}, 4));
    CHECK(lemma41_check(a1, {{al, 2}}, {al, al}, 3));
}

TEST_CASE("crossing corrections") {
    auto a1 = Lattice::make({{2}});
    LatticeVector al{Rational(1)};
    FockElement sample = heis_mode(al, -1, FockElement::vacuum(a1));
    CHECK(lemma43_plus_check(a1, {{al, 1}}, al, sample, 4));
    CHECK(lemma43_plus_check(a1, {{al, 2}}, al, FockElement::vacuum(a1), 4));
    CHECK(lemma43_minus_check(a1, {{al, 1}}, al, sample, 4, 4));
}

TEST_CASE("product formula") {
    auto a1 = Lattice::make({{2}});
    LatticeVector al{Rational(1)};
    CHECK(product_formula_check(a1, al, 1, {}, 3, 3));
    CHECK(product_formula_check(a1, al, 2, {}, 3, 3));
    CHECK(product_formula_check(a1, al, 1, {al}, 3, 3));
    CHECK(product_formula_check(a1, al, 2, {al}, 2, 2));
}

} // TEST_SUITE
