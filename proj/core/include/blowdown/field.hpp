#pragma once

#include "blowdown/rational.hpp"

#include <array>
#include <string>

namespace blowdown {

// Element of Q(i, sqrt2, sqrt3), a degree-8 field. Coordinates follow the
// basis {1, i} x {1, sqrt2} x {1, sqrt3}; index bits: 1 = i, 2 = sqrt2,
// 4 = sqrt3, so e.g. coord(3) multiplies i*sqrt2 and coord(6) sqrt6.
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(Rational rational) { coords_[0] = std::move(rational); }

    static FieldElement zero() { return FieldElement(); }
    static FieldElement one() { return FieldElement(Rational(1)); }
    static FieldElement i();
    static FieldElement sqrt2();
    static FieldElement sqrt3();
    static FieldElement basis(int index, Rational coeff = Rational(1));

    const Rational& coord(int index) const { return coords_[index]; }
    bool is_zero() const;
    bool is_rational() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const = default;

    // Multiplicative inverse, computed by solving the 8x8 system of
    // multiplication by *this. Throws DivisionByZero on zero.
    FieldElement inverse() const;

    std::string to_string() const;

private:
    std::array<Rational, 8> coords_{};
};

} // namespace blowdown
