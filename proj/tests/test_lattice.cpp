#include <doctest.h>

#include "lva/lattice.hpp"

using namespace lva;

namespace {

LatticeVector vec(std::initializer_list<Rational> xs) { return LatticeVector(xs); }

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("construction accepts even nondegenerate Gram matrices") {
    auto a1 = Lattice::make({{2}});
    CHECK(a1->rank() == 1);
    CHECK(a1->det() == 2);
    auto a2 = Lattice::make({{2, -1}, {-1, 2}});
    CHECK(a2->det() == 3);
    CHECK(Lattice::make({{2, 0}, {0, 4}})->det() == 8);
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(Lattice::make({{1}}), std::invalid_argument);          // odd
    CHECK_THROWS_AS(Lattice::make({{2, 1}, {0, 2}}), std::invalid_argument); // asymmetric
    CHECK_THROWS_AS(Lattice::make({{2, 2}, {2, 2}}), std::invalid_argument); // det 0
    CHECK_THROWS_AS(Lattice::make({{2, -1}}), std::invalid_argument);      // not square
}

TEST_CASE("pairing is the bilinear Gram form") {
    auto a1 = Lattice::make({{2}});
    CHECK(a1->pairing(vec({1}), vec({1})) == 2);
    CHECK(a1->pairing(vec({Rational(1, 2)}), vec({1})) == 1);
    auto a2 = Lattice::make({{2, -1}, {-1, 2}});
    CHECK(a2->pairing(vec({1, 0}), vec({0, 1})) == -1);
    CHECK(a2->pairing(vec({1, 1}), vec({1, 1})) == 2);
}

TEST_CASE("epsilon cocycle table and bimultiplicativity") {
    auto a1 = Lattice::make({{2}});
    auto a2 = Lattice::make({{2, -1}, {-1, 2}});
    LatticeVector e1 = vec({1, 0}), e2 = vec({0, 1});
    CHECK(a2->epsilon(zero_vector(2), e2) == 1);
    CHECK(a2->epsilon(e1, e2) == 1);
    CHECK(a2->epsilon(e2, e1) == -1);
    CHECK(a1->epsilon(vec({1}), vec({1})) == 1);
    // bimultiplicative: eps(a+b, c) = eps(a,c) eps(b,c) on a sample grid
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                LatticeVector va = vec({a, 0}), vb = vec({b, 1}), vc = vec({c, -1});
                CHECK(a2->epsilon(add(va, vb), vc) ==
                      a2->epsilon(va, vc) * a2->epsilon(vb, vc));
                CHECK(a2->epsilon(vc, add(va, vb)) ==
                      a2->epsilon(vc, va) * a2->epsilon(vc, vb));
            }
}

TEST_CASE("epsilon 2-cocycle identity epsilon(a,b)/epsilon(b,a)=(-1)^<a,b>") {
    auto a2 = Lattice::make({{2, -1}, {-1, 2}});
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            LatticeVector va = vec({a, 1}), vb = vec({b, -1});
            Rational pq = a2->pairing(va, vb);
            int expect = (numerator(pq) % 2 == 0) ? 1 : -1;
            CHECK(a2->epsilon(va, vb) * a2->epsilon(vb, va) == expect);
        }
}

TEST_CASE("dual membership") {
    auto a1 = Lattice::make({{2}});
    CHECK(a1->dual_membership(vec({Rational(1, 2)})));
    CHECK_FALSE(a1->dual_membership(vec({Rational(1, 3)})));
    CHECK(a1->dual_membership(vec({-3})));
}

TEST_CASE("dual coset representatives") {
    auto a1 = Lattice::make({{2}});
    auto reps = a1->dual_coset_reps();
    REQUIRE(reps.size() == 2);
    CHECK(reps[0] == vec({0}));
    CHECK(reps[1] == vec({Rational(1, 2)}));

    CHECK(Lattice::make({{2, -1}, {-1, 2}})->dual_coset_reps().size() == 3);
    CHECK(Lattice::make({{2, 1}, {1, 2}})->dual_coset_reps().size() == 3);
    CHECK(Lattice::make({{2, 0}, {0, 4}})->dual_coset_reps().size() == 8);
    // every rep is in the dual and reps are pairwise distinct mod L
    auto d2 = Lattice::make({{2, 0}, {0, 4}});
    auto rr = d2->dual_coset_reps();
    for (std::size_t i = 0; i < rr.size(); ++i) {
        CHECK(d2->dual_membership(rr[i]));
        for (std::size_t j = i + 1; j < rr.size(); ++j)
            CHECK_FALSE(is_integral_vector(sub(rr[i], rr[j])));
    }
}

} // TEST_SUITE
