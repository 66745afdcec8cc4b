#include "blowdown/field.hpp"

#include "blowdown/errors.hpp"
#include "blowdown/matrix.hpp"

#include <sstream>

namespace blowdown {

namespace {

const char* basis_name(int index) {
    static const char* names[8] = {"1", "i", "sqrt2", "i*sqrt2", "sqrt3", "i*sqrt3", "sqrt6", "i*sqrt6"};
    return names[index];
}

// product of basis elements a, b: index is the XOR of the bit patterns, the
// scalar factor collects i^2 = -1, sqrt2^2 = 2, sqrt3^2 = 3.
Rational basis_factor(int a, int b) {
    Rational f = 1;
    if (a & b & 1) f *= -1;
    if (a & b & 2) f *= 2;
    if (a & b & 4) f *= 3;
    return f;
}

} // namespace

FieldElement FieldElement::i() { return basis(1); }
FieldElement FieldElement::sqrt2() { return basis(2); }
FieldElement FieldElement::sqrt3() { return basis(4); }

FieldElement FieldElement::basis(int index, Rational coeff) {
    FieldElement e;
    e.coords_[index] = std::move(coeff);
    return e;
}

bool FieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (int k = 1; k < 8; ++k)
        if (coords_[k] != 0) return false;
    return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    FieldElement out;
    for (int k = 0; k < 8; ++k) out.coords_[k] = coords_[k] + o.coords_[k];
    return out;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    FieldElement out;
    for (int k = 0; k < 8; ++k) out.coords_[k] = coords_[k] - o.coords_[k];
    return out;
}

FieldElement FieldElement::operator-() const {
    FieldElement out;
    for (int k = 0; k < 8; ++k) out.coords_[k] = -coords_[k];
    return out;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    FieldElement out;
    for (int a = 0; a < 8; ++a) {
        if (coords_[a] == 0) continue;
        for (int b = 0; b < 8; ++b) {
            if (o.coords_[b] == 0) continue;
            out.coords_[a ^ b] += coords_[a] * o.coords_[b] * basis_factor(a, b);
        }
    }
    return out;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero field element");
    // column j of the system is (*this) * basis_j
    RationalMatrix mul(8, 8);
    for (int j = 0; j < 8; ++j) {
        FieldElement col = *this * basis(j);
        for (int r = 0; r < 8; ++r) mul.at(r, j) = col.coords_[r];
    }
    RationalMatrix inv = invert(mul);
    FieldElement out;
    for (int r = 0; r < 8; ++r) out.coords_[r] = inv.at(r, 0); // image of 1
    return out;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 8; ++k) {
        const Rational& c = coords_[k];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << rational_to_string(mag);
        } else {
            if (mag != 1) os << rational_to_string(mag) << "*";
            os << basis_name(k);
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace blowdown
