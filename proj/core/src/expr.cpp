#include "blowdown/expr.hpp"

#include "blowdown/errors.hpp"

#include <cctype>

namespace blowdown {

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    FieldElement parse() {
        FieldElement v = sum();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw Error(ErrorKind::Parse,
                    msg + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    FieldElement sum() {
        FieldElement v = eat('-') ? -product() : (eat('+'), product());
        while (true) {
            if (eat('+')) v = v + product();
            else if (eat('-')) v = v - product();
            else return v;
        }
    }

    FieldElement product() {
        FieldElement v = power();
        while (true) {
            if (eat('*')) v = v * power();
            else if (eat('/')) v = v / power();
            else return v;
        }
    }

    FieldElement power() {
        FieldElement base = atom();
        if (!eat('^')) return base;
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.empty()) fail("expected exponent");
        int e = std::stoi(digits);
        FieldElement out = FieldElement::one();
        for (int k = 0; k < e; ++k) out = out * base;
        return out;
    }

    FieldElement atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            FieldElement v = sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            return FieldElement(Rational(Integer(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
                word += text_[pos_++];
            if (word == "i") return FieldElement::i();
            if (word == "sqrt2") return FieldElement::sqrt2();
            if (word == "sqrt3") return FieldElement::sqrt3();
            if (word == "sqrt6") return FieldElement::sqrt2() * FieldElement::sqrt3();
            fail("unknown constant '" + word + "'");
        }
        fail("unexpected character");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

FieldElement parse_field_expr(const std::string& text) {
    return ExprParser(text).parse();
}

} // namespace blowdown
