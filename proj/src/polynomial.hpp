#pragma once

#include <string>
#include <vector>

#include "bigint.hpp"

namespace gcdval {

// Dense integer polynomial, coefficients in ascending degree order.
// Canonical form: no trailing zero coefficient; zero polynomial is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(Int constant);
    explicit IntPolynomial(long constant) : IntPolynomial(Int(constant)) {}

    static IntPolynomial from_coefficients(std::vector<Int> ascending);
    static IntPolynomial x();
    // x - a
    static IntPolynomial linear_root(const Int& a);

    const std::vector<Int>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Int& leading() const;
    bool is_monic() const;
    // Coefficient of x^i (0 beyond the degree).
    Int coefficient(std::size_t i) const;

    Int evaluate(const Int& n) const;
    // f(x + c)
    IntPolynomial shift(const Int& c) const;
    IntPolynomial derivative() const;
    IntPolynomial pow(unsigned long e) const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a,
                                   const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a,
                                   const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a,
                                   const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
        return !(a == b);
    }

    // Descending powers with explicit signs, e.g. "x^4 - 2*x^3 + x^2 + 2".
    std::string str() const;

private:
    void trim();

    std::vector<Int> coeffs_;
};

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := 'x' | uint | '(' expr ')'
// Whitespace is ignored; implicit multiplication is rejected.
IntPolynomial parse_poly(const std::string& text);

}  // namespace gcdval
