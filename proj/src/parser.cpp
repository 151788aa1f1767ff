#include "folint/parser.hpp"
#include <cctype>

namespace folint {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    QRat2 run() {
        skip_ws();
        QRat2 e = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        return e;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected) {
        throw ParseError(pos_, expected,
                         "parse error at offset " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    QRat2 expr() {
        bool neg = false;
        skip_ws();
        if (peek() == '-') { ++pos_; neg = true; }
        QRat2 acc = term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+') { ++pos_; acc += term(); }
            else if (c == '-') { ++pos_; acc -= term(); }
            else break;
        }
        return acc;
    }

    QRat2 term() {
        QRat2 acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') { ++pos_; acc *= factor(); }
            else if (c == '/') {
                ++pos_;
                QRat2 d = factor();
                if (d.is_zero()) throw DivisionByZero("division by zero in expression");
                acc /= d;
            } else break;
        }
        return acc;
    }

    QRat2 factor() {
        QRat2 b = base();
        if (eat('^')) {
            long e = uint_lit();
            return b.pow(e);
        }
        return b;
    }

    QRat2 base() {
        char c = peek();
        if (c == 'x') { ++pos_; return QRat2::x(); }
        if (c == 'y') { ++pos_; return QRat2::y(); }
        if (c == '(') {
            ++pos_;
            QRat2 e = expr();
            if (!eat(')')) fail({"')'"});
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = int_lit();
            return QRat2(QPoly(Rat(n)));
        }
        fail({"'x'", "'y'", "integer", "'('"});
    }

    Int int_lit() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail({"integer"});
        return Int(s_.substr(start, pos_ - start));
    }

    long uint_lit() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail({"unsigned integer"});
        return std::stol(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

QRat2 parse_expression(const std::string& text) {
    return Parser(text).run();
}

} // namespace folint
