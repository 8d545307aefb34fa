#include "kohn/parse.hpp"

#include <cctype>
#include <sstream>

#include "kohn/errors.hpp"

namespace kohn {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    unsigned nvars;

    explicit Parser(const std::string& text, unsigned nv) : s(text), nvars(nv) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw domain_error("parse error at position " + std::to_string(pos) + ": " + what);
    }

    unsigned long read_nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected number");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
            ++pos;
        }
        return v;
    }

    Poly parse_expr() {
        bool neg = false;
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            if (eat('-')) neg = !neg;
            else eat('+');
        }
        Poly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+') {
                eat('+');
                acc += parse_term();
            } else if (c == '-') {
                eat('-');
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (peek() == '*') {
            eat('*');
            acc = acc * parse_factor();
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (peek() == '^') {
            eat('^');
            unsigned long e = read_nat();
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (c == 'z' || c == 'w') {
            ++pos;
            unsigned long idx = read_nat();
            if (idx == 0 || idx > nvars) fail("variable index out of range");
            return Poly::variable(nvars, static_cast<unsigned>(idx - 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long num = read_nat();
            if (peek() == '/') {
                eat('/');
                unsigned long den = read_nat();
                return Poly::constant(nvars, make_rat(Int(static_cast<unsigned long>(num)),
                                                      Int(static_cast<unsigned long>(den))));
            }
            return Poly::constant(nvars, Rat(static_cast<unsigned long>(num)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

unsigned max_variable_index(const std::string& text) {
    unsigned best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if ((text[i] == 'z' || text[i] == 'w') && i + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            unsigned v = 0;
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                v = v * 10 + static_cast<unsigned>(text[j] - '0');
                ++j;
            }
            if (v > best) best = v;
        }
    }
    return best;
}

Poly parse_poly(const std::string& text, unsigned nvars) {
    Parser p(text, nvars);
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

std::vector<Poly> parse_poly_list(const std::string& text, unsigned nvars_override) {
    unsigned nv = nvars_override ? nvars_override : max_variable_index(text);
    if (nv == 0) throw domain_error("no variables found and no --nvars given");
    std::vector<Poly> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            std::string piece = text.substr(start, i - start);
            if (piece.find_first_not_of(" \t") != std::string::npos)
                out.push_back(parse_poly(piece, nv));
            start = i + 1;
        }
    }
    if (out.empty()) throw domain_error("empty polynomial list");
    return out;
}

std::string poly_to_string(const Poly& p, const std::string& var_prefix) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.coef;
        bool negative = sgn(c) < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (negative) c = -c;
        bool has_vars = !is_zero_exp(t.exp);
        bool coef_shown = (c != 1) || !has_vars;
        if (coef_shown) os << rat_to_string(c);
        bool star = coef_shown;
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            if (!t.exp[i]) continue;
            if (star) os << "*";
            os << var_prefix << (i + 1);
            if (t.exp[i] > 1) os << "^" << t.exp[i];
            star = true;
        }
        first = false;
    }
    return os.str();
}

}  // namespace kohn
