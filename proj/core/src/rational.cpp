#include "blowdown/rational.hpp"

#include "blowdown/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace blowdown {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Dimension: return "dimension error";
    case ErrorKind::Shape: return "shape error";
    case ErrorKind::Singular: return "singularity error";
    case ErrorKind::DivisionByZero: return "division error";
    case ErrorKind::UnboundSymbol: return "unbound-symbol error";
    case ErrorKind::InfeasibleConfiguration: return "infeasible-configuration error";
    case ErrorKind::DirectionAmbiguity: return "direction-ambiguity error";
    case ErrorKind::StalePoint: return "stale-point error";
    case ErrorKind::NameError: return "name error";
    case ErrorKind::EmbeddingInconsistency: return "embedding-inconsistency error";
    case ErrorKind::NotSimplePlumbing: return "not-a-simple-plumbing error";
    case ErrorKind::NotTree: return "not-a-tree error";
    case ErrorKind::NotStarShaped: return "not-star-shaped error";
    case ErrorKind::UnreducedLeg: return "unreduced-leg error";
    case ErrorKind::FactValidation: return "fact-validation error";
    case ErrorKind::Unclassifiable: return "unclassifiable error";
    case ErrorKind::OutOfLemmaRange: return "out-of-lemma-range error";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::Internal: return "internal error";
    }
    return "error";
}

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "malformed rational '" + text + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::optional<std::string> decimal_render(const Rational& r, std::size_t max_period) {
    Integer num = numerator(r);
    Integer den = denominator(r);
    std::string out;
    if (num < 0) {
        out += "-";
        num = -num;
    }
    Integer ip = num / den;
    Integer rem = num % den;
    out += ip.str();
    if (rem == 0) return out;
    out += ".";

    // Long division; a repeated remainder marks the start of the repetend.
    std::map<Integer, std::size_t> seen;
    std::string digits;
    while (rem != 0) {
        auto it = seen.find(rem);
        if (it != seen.end()) {
            out += digits.substr(0, it->second);
            out += "(" + digits.substr(it->second) + ")";
            return out;
        }
        seen[rem] = digits.size();
        if (digits.size() > max_period) return std::nullopt;
        rem *= 10;
        Integer d = rem / den;
        digits += static_cast<char>('0' + static_cast<int>(d));
        rem %= den;
    }
    out += digits;
    return out;
}

Rational decimal_parse(const std::string& text) {
    if (text.find('/') != std::string::npos) return rational_from_string(text);
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    auto bad = [&]() -> Error { return Error(ErrorKind::Parse, "malformed decimal '" + text + "'"); };
    if (s.empty()) throw bad();

    std::string ipart, fpart, rpart;
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ipart += s[i++];
    if (ipart.empty()) throw bad();
    if (i < s.size()) {
        if (s[i] != '.') throw bad();
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) fpart += s[i++];
        if (i < s.size()) {
            if (s[i] != '(') throw bad();
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) rpart += s[i++];
            if (rpart.empty() || i >= s.size() || s[i] != ')') throw bad();
            ++i;
        }
        if (i != s.size()) throw bad();
        if (fpart.empty() && rpart.empty()) throw bad();
    }

    Integer ten(10);
    auto pow10 = [&](std::size_t n) {
        Integer p(1);
        for (std::size_t j = 0; j < n; ++j) p *= ten;
        return p;
    };
    Rational value(Integer(ipart));
    if (!fpart.empty()) value += Rational(Integer(fpart), pow10(fpart.size()));
    if (!rpart.empty()) {
        // repetend b of length q after p fixed digits adds b / (10^p (10^q - 1))
        value += Rational(Integer(rpart), pow10(fpart.size()) * (pow10(rpart.size()) - 1));
    }
    return neg ? Rational(-value) : value;
}

} // namespace blowdown
