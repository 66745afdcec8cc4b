#include "blowdown/linear_form.hpp"

#include "blowdown/errors.hpp"

#include <sstream>

namespace blowdown {

Symbol Symbol::parse(const std::string& name) {
    if (name == "a") return a();
    if (name.size() >= 2 && name[0] == 'b') {
        try {
            int i = std::stoi(name.substr(1));
            if (i >= 1) return b(i);
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorKind::Parse, "unknown symbol '" + name + "' (expected a or b<i>)");
}

LinearForm LinearForm::symbol(Symbol s, Rational coeff) {
    LinearForm f;
    if (coeff != 0) f.coefficients_[s] = std::move(coeff);
    return f;
}

Rational LinearForm::coefficient(Symbol s) const {
    auto it = coefficients_.find(s);
    return it == coefficients_.end() ? Rational(0) : it->second;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
    constant_ += other.constant_;
    for (const auto& [s, c] : other.coefficients_) {
        Rational& mine = coefficients_[s];
        mine += c;
        if (mine == 0) coefficients_.erase(s);
    }
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
    return *this += -other;
}

LinearForm& LinearForm::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        constant_ = 0;
        coefficients_.clear();
        return *this;
    }
    constant_ *= scalar;
    for (auto& [s, c] : coefficients_) c *= scalar;
    return *this;
}

LinearForm LinearForm::operator+(const LinearForm& other) const {
    LinearForm out = *this;
    out += other;
    return out;
}

LinearForm LinearForm::operator-(const LinearForm& other) const {
    LinearForm out = *this;
    out -= other;
    return out;
}

LinearForm LinearForm::operator*(const Rational& scalar) const {
    LinearForm out = *this;
    out *= scalar;
    return out;
}

LinearForm LinearForm::operator-() const {
    return *this * Rational(-1);
}

Rational LinearForm::eval(const std::map<Symbol, Rational>& assignment) const {
    Rational total = constant_;
    for (const auto& [s, c] : coefficients_) {
        auto it = assignment.find(s);
        if (it == assignment.end())
            throw Error(ErrorKind::UnboundSymbol, "no value bound for " + s.name());
        total += c * it->second;
    }
    return total;
}

std::string LinearForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& sym) {
        if (c == 0) return;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (sym.empty()) {
            os << rational_to_string(mag);
        } else {
            if (mag != 1) os << rational_to_string(mag) << "*";
            os << sym;
        }
    };
    emit(constant_, "");
    for (const auto& [s, c] : coefficients_) emit(c, s.name());
    if (first) os << "0";
    return os.str();
}

} // namespace blowdown
