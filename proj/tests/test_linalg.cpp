#include "doctest.h"

#include <random>

#include "oqk/linalg.hpp"

using namespace oqk;

namespace {

Mat random_invertible(const FieldSpecPtr& s, size_t n, std::mt19937& rng) {
    auto elems = enumerate_field(s);
    std::uniform_int_distribution<size_t> d(0, elems.size() - 1);
    for (;;) {
        Mat M(s, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) M.at(i, j) = elems[d(rng)];
        if (rank(M) == n) return M;
    }
}

}  // namespace

TEST_CASE("rref, rank, inverse over GF(2) and GF(4)") {
    std::mt19937 rng(5);
    for (unsigned m : {1u, 2u}) {
        auto s = FieldSpec::binary_ext_default(m);
        for (int rep = 0; rep < 20; ++rep) {
            Mat M = random_invertible(s, 4, rng);
            auto Minv = inverse(M);
            REQUIRE(Minv.has_value());
            CHECK((M * *Minv).is_identity());
            CHECK((*Minv * M).is_identity());
        }
    }
}

TEST_CASE("kernel and solve") {
    auto s = FieldSpec::gf2();
    Mat A(s, 2, 3);
    FieldElement one = FieldElement::one(s);
    // rows: (1,1,0), (0,0,1); kernel = span{(1,1,0)}
    A.at(0, 0) = one;
    A.at(0, 1) = one;
    A.at(1, 2) = one;
    auto ker = kernel_basis(A);
    REQUIRE(ker.size() == 1);
    CHECK(A.apply(ker[0]).is_zero());

    Vec b(s, 2);
    b[0] = one;
    auto x = solve(A, b);
    REQUIRE(x.has_value());
    CHECK(A.apply(*x) == b);

    Vec bad(s, 2);
    Mat Z(s, 2, 3);
    bad[0] = one;
    CHECK(!solve(Z, bad).has_value());
}

TEST_CASE("subspace canonical form and operations") {
    auto s = FieldSpec::gf2();
    FieldElement one = FieldElement::one(s);
    Vec e1(s, 3), e2(s, 3), e12(s, 3);
    e1[0] = one;
    e2[1] = one;
    e12[0] = one;
    e12[1] = one;
    Subspace a = Subspace::span(s, 3, {e1, e2});
    Subspace b = Subspace::span(s, 3, {e12, e2});
    CHECK(a == b);  // same subspace, different generators
    CHECK(a.dim() == 2);
    CHECK(a.contains(e12));
    Subspace c = Subspace::span(s, 3, {e12});
    CHECK(a.intersect(c) == c);
    CHECK(a.sum(c) == a);
}

TEST_CASE("rank over the function field") {
    auto s = FieldSpec::rat_func();
    FieldElement t = FieldElement::gen(s);
    Mat M(s, 2, 2);
    M.at(0, 0) = t;
    M.at(0, 1) = FieldElement::one(s);
    M.at(1, 0) = t * t;
    M.at(1, 1) = t;
    CHECK(rank(M) == 1);  // second row = t * first row
    M.at(1, 1) = t + FieldElement::one(s);
    CHECK(rank(M) == 2);
}
