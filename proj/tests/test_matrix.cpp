#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "errors.hpp"
#include "harness.hpp"
#include "matrix.hpp"
#include "oracles.hpp"
#include "polynomial.hpp"
#include "rng.hpp"

using namespace gcdval;

namespace {

IntegerMatrix matrix_of(std::vector<std::vector<long>> rows) {
    IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = Int(rows[r][c]);
    return m;
}

Int product(const std::vector<Int>& xs) {
    Int out = 1;
    for (const Int& x : xs) out *= x;
    return out;
}

}  // namespace

TEST_CASE("sylvester layout") {
    IntegerMatrix m = sylvester_matrix(parse_poly("x"), parse_poly("x-6"));
    CHECK(m == matrix_of({{1, 0}, {1, -6}}));

    IntegerMatrix m4 = sylvester_matrix(parse_poly("x^2+1"), parse_poly("x^2-1"));
    CHECK(m4 == matrix_of({{1, 0, 1, 0},
                           {0, 1, 0, 1},
                           {1, 0, -1, 0},
                           {0, 1, 0, -1}}));

    IntegerMatrix asym =
        sylvester_matrix(parse_poly("x^3+2*x-5"), parse_poly("x^2+7"));
    CHECK(asym == matrix_of({{1, 0, 2, -5, 0},
                             {0, 1, 0, 2, -5},
                             {1, 0, 7, 0, 0},
                             {0, 1, 0, 7, 0},
                             {0, 0, 1, 0, 7}}));
}

TEST_CASE("sylvester degenerate and error cases") {
    CHECK(sylvester_matrix(IntPolynomial(1L), parse_poly("x^3-2*x+1")).rows() ==
          0);
    CHECK(sylvester_matrix(parse_poly("x^2+3"), IntPolynomial(1L)).rows() == 0);
    CHECK_THROWS_AS(sylvester_matrix(parse_poly("2*x+1"), parse_poly("x")),
                    NotMonicError);
    CHECK_THROWS_AS(sylvester_matrix(parse_poly("x"), IntPolynomial()),
                    NotMonicError);
}

TEST_CASE("determinant against cofactor expansion") {
    CHECK(determinant_bareiss(IntegerMatrix(0, 0)) == 1);
    CHECK(determinant_bareiss(matrix_of({{42}})) == 42);
    CHECK(determinant_bareiss(matrix_of({{1, 2}, {3, 4}})) == -2);
    // needs a row swap: leading zero pivot
    CHECK(determinant_bareiss(matrix_of({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant_bareiss(matrix_of({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) ==
          -1);
    // singular
    CHECK(determinant_bareiss(matrix_of({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant_bareiss(matrix_of({{0, 0}, {0, 5}})) == 0);

    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng.below(4);
        IntegerMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m.at(r, c) = Int(static_cast<long>(rng.uniform(-10, 10)));
        CHECK(determinant_bareiss(m) == oracle::determinant_cofactor(m));
    }
}

TEST_CASE("resultant examples") {
    CHECK(resultant(parse_poly("x^2+1"), parse_poly("x^2-1")) == 4);
    CHECK(resultant(parse_poly("x^5-3*x+1"), IntPolynomial(1L)) == 1);
    CHECK(resultant(IntPolynomial(1L), IntPolynomial(1L)) == 1);
    CHECK(resultant(parse_poly("x"), parse_poly("x-6")) == -6);
    CHECK(resultant(parse_poly("x"), parse_poly("x")) == 0);
    CHECK(resultant(parse_poly("x^2+x+2"), parse_poly("x^2+x")) == 4);
    CHECK(resultant(parse_poly("x^2+x+1"), parse_poly("x^2+x-1")) == 4);
}

TEST_CASE("resultant of split f is the product of g at the roots") {
    IntPolynomial g = parse_poly("x^2+x+1");
    IntPolynomial f = IntPolynomial(1L);
    Int expected = 1;
    for (long a : {0L, 1L, -2L, 5L}) {
        f = f * IntPolynomial::linear_root(Int(a));
        expected *= g.evaluate(Int(a));
    }
    // res(f, g) = prod g(roots of f) for monic split f
    CHECK(resultant(f, g) == expected);
}

TEST_CASE("smith normal form") {
    SmithForm identity = smith_normal_form(matrix_of({{1, 0, 0},
                                                      {0, 1, 0},
                                                      {0, 0, 1}}));
    CHECK(identity.invariant_factors == std::vector<Int>{1, 1, 1});
    CHECK(identity.rank == 3);

    SmithForm diag = smith_normal_form(matrix_of({{2, 0}, {0, 4}}));
    CHECK(diag.invariant_factors == std::vector<Int>{2, 4});

    // needs the divisibility fix: gcd(4, 6) = 2 must surface first
    SmithForm fix = smith_normal_form(matrix_of({{4, 0}, {0, 6}}));
    CHECK(fix.invariant_factors == std::vector<Int>{2, 12});

    SmithForm rect = smith_normal_form(matrix_of({{2, 4, 6}, {2, 4, 8}}));
    CHECK(rect.rank == 2);
    CHECK(rect.rows == 2);
    CHECK(rect.cols == 3);
    CHECK(rect.invariant_factors == std::vector<Int>{2, 2});

    SmithForm zero = smith_normal_form(matrix_of({{0, 0}, {0, 0}}));
    CHECK(zero.rank == 0);
    CHECK(zero.invariant_factors.empty());

    SmithForm syl = smith_normal_form(
        sylvester_matrix(parse_poly("x^2+1"), parse_poly("x^2-1")));
    CHECK(product(syl.invariant_factors) == 4);
    for (std::size_t i = 1; i < syl.invariant_factors.size(); ++i) {
        CHECK(syl.invariant_factors[i] % syl.invariant_factors[i - 1] == 0);
    }
}

TEST_CASE("quotient group") {
    CHECK(quotient_group(parse_poly("x"), parse_poly("x-6")) ==
          std::vector<Int>{6});
    CHECK(quotient_group(parse_poly("x"), parse_poly("x-1")).empty());
    CHECK(product(quotient_group(parse_poly("x^2+1"), parse_poly("x^2-1"))) ==
          4);
    CHECK_THROWS_AS(quotient_group(parse_poly("x"), parse_poly("x")),
                    ZeroResultantError);
    CHECK_THROWS_AS(
        quotient_group(parse_poly("(x-1)*(x-2)"), parse_poly("(x-2)*(x-3)")),
        ZeroResultantError);
}

TEST_CASE("determinant and invariant factors agree on random pairs") {
    Rng rng(101);
    int kept = 0;
    while (kept < 200) {
        IntPolynomial f = random_monic(rng, 4, 10);
        IntPolynomial g = random_monic(rng, 4, 10);
        Int r = resultant(f, g);
        if (r == 0) continue;
        ++kept;
        SmithForm smith = smith_normal_form(sylvester_matrix(f, g));
        CHECK(abs(r) == product(smith.invariant_factors));
        for (std::size_t i = 1; i < smith.invariant_factors.size(); ++i) {
            CHECK(smith.invariant_factors[i] % smith.invariant_factors[i - 1] ==
                  0);
        }
    }
}

TEST_CASE("resultant algebraic identities") {
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        IntPolynomial f = random_monic(rng, 3, 6);
        IntPolynomial g = random_monic(rng, 3, 6);
        unsigned long k = static_cast<unsigned long>(f.degree());
        unsigned long l = static_cast<unsigned long>(g.degree());
        Int sign = (k * l) % 2 == 0 ? 1 : -1;
        CHECK(resultant(f, g) == sign * resultant(g, f));
        for (long c = -3; c <= 3; ++c) {
            CHECK(resultant(f.shift(Int(c)), g.shift(Int(c))) ==
                  resultant(f, g));
        }
        IntPolynomial f2 = random_monic(rng, 2, 4);
        CHECK(resultant(f * f2, g) == resultant(f, g) * resultant(f2, g));
    }
}
