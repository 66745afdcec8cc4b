#pragma once

#include "blowdown/rational.hpp"

#include <map>
#include <string>

namespace blowdown {

// Symbols live in the fixed family {a, b1, b2, ...}: "a" first, then the b_i
// by index. index() == 0 encodes a, otherwise the b-index.
struct Symbol {
    int idx = 0;

    static Symbol a() { return Symbol{0}; }
    static Symbol b(int i) { return Symbol{i}; }
    static Symbol parse(const std::string& name);

    bool is_a() const { return idx == 0; }
    std::string name() const { return idx == 0 ? "a" : "b" + std::to_string(idx); }

    auto operator<=>(const Symbol&) const = default;
};

// Exact linear combination c + sum coeff_s * s. Zero coefficients are never stored.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(Rational constant) : constant_(std::move(constant)) {}
    static LinearForm symbol(Symbol s, Rational coeff = Rational(1));

    const Rational& constant() const { return constant_; }
    const std::map<Symbol, Rational>& coefficients() const { return coefficients_; }
    Rational coefficient(Symbol s) const;

    bool is_constant() const { return coefficients_.empty(); }

    LinearForm& operator+=(const LinearForm& other);
    LinearForm& operator-=(const LinearForm& other);
    LinearForm& operator*=(const Rational& scalar);
    LinearForm operator+(const LinearForm& other) const;
    LinearForm operator-(const LinearForm& other) const;
    LinearForm operator*(const Rational& scalar) const;
    LinearForm operator-() const;
    bool operator==(const LinearForm& other) const = default;

    // Exact substitution; every symbol of the form must be bound.
    Rational eval(const std::map<Symbol, Rational>& assignment) const;

    std::string to_string() const;

private:
    Rational constant_ = 0;
    std::map<Symbol, Rational> coefficients_;
};

inline LinearForm operator*(const Rational& scalar, const LinearForm& f) { return f * scalar; }

} // namespace blowdown
