#include "polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "errors.hpp"

namespace gcdval {

IntPolynomial::IntPolynomial(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPolynomial IntPolynomial::from_coefficients(std::vector<Int> ascending) {
    IntPolynomial p;
    p.coeffs_ = std::move(ascending);
    p.trim();
    return p;
}

IntPolynomial IntPolynomial::x() {
    return from_coefficients({Int(0), Int(1)});
}

IntPolynomial IntPolynomial::linear_root(const Int& a) {
    return from_coefficients({-a, Int(1)});
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::leading() const {
    if (coeffs_.empty())
        throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool IntPolynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

Int IntPolynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Int(0);
}

Int IntPolynomial::evaluate(const Int& n) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * n + *it;
    return acc;
}

IntPolynomial IntPolynomial::shift(const Int& c) const {
    // Horner over Z[x]: f(x+c) = (...(a_d*(x+c) + a_{d-1})*(x+c) + ...)
    IntPolynomial xc = from_coefficients({c, Int(1)});
    IntPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * xc + IntPolynomial(*it);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial();
    std::vector<Int> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return from_coefficients(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned long e) const {
    IntPolynomial acc(Int(1));
    IntPolynomial base = *this;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        base = base * base;
        e >>= 1UL;
    }
    return acc;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return IntPolynomial::from_coefficients(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial::from_coefficients(std::move(out));
}

std::string IntPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (long d = degree(); d >= 0; --d) {
        const Int& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Int mag = abs(c);
        bool unit = (mag == 1);
        if (d == 0) {
            out += mag.get_str();
        } else {
            if (!unit) {
                out += mag.get_str();
                out += "*";
            }
            out += "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    IntPolynomial run() {
        IntPolynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" +
                                 std::string(1, text_[pos_]) + "'",
                             pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    IntPolynomial expr() {
        skip_ws();
        bool negate = false;
        if (consume('-'))
            negate = true;
        else
            consume('+');
        IntPolynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (consume('+'))
                acc = acc + term();
            else if (consume('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    IntPolynomial term() {
        IntPolynomial acc = factor();
        while (consume('*')) acc = acc * factor();
        return acc;
    }

    IntPolynomial factor() {
        IntPolynomial b = base();
        if (consume('^')) return b.pow(uint_literal("exponent"));
        return b;
    }

    IntPolynomial base() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            return IntPolynomial::x();
        }
        if (c == '(') {
            ++pos_;
            IntPolynomial inner = expr();
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return IntPolynomial(int_literal());
        throw ParseError("expected 'x', an integer, or '('", pos_);
    }

    Int int_literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    unsigned long uint_literal(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(std::string("expected unsigned ") + what, pos_);
        Int v = int_literal();
        if (v > 100000)
            throw ParseError(std::string(what) + " too large", start);
        return v.get_ui();
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_poly(const std::string& text) {
    return Parser(text).run();
}

}  // namespace gcdval
