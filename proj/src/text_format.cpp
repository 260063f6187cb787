#include "apolar/text_format.hpp"

#include <cctype>

#include "apolar/errors.hpp"

namespace apolar {

std::string format_monomial(const Monomial& m, const VariableGrid& grid, Ring ring) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& p : m.powers()) {
        if (!out.empty()) out += '*';
        out += grid.variable_name(p.var, ring);
        if (p.exp > 1) out += "^" + std::to_string(p.exp);
    }
    return out;
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.coeff < 0;
        const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += format_monomial(t.mono, p.grid(), p.ring());
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, Ring ring, const VariableGrid& grid) : s_(text), ring_(ring), grid_(grid) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            terms.push_back(parse_term(sign));
            skip_space();
        }
        return Polynomial::from_terms(ring_, grid_, std::move(terms));
    }

private:
    Term parse_term(Rational coeff) {
        std::vector<VarPower> powers;
        bool need_factor = true;
        while (need_factor) {
            skip_space();
            if (at_end()) fail("unexpected end of input");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_number();
            } else {
                const auto [entry, exp] = parse_power();
                if (entry.is_zero()) coeff = 0;
                if (entry.sign < 0 && exp % 2 == 1) coeff = -coeff;
                if (!entry.is_zero()) powers.push_back({entry.var, exp});
            }
            skip_space();
            need_factor = !at_end() && peek() == '*';
            if (need_factor) ++pos_;
        }
        return Term{Monomial::from_powers(powers), coeff};
    }

    Rational parse_number() {
        const Integer num = parse_integer();
        if (!at_end() && peek() == '/') {
            ++pos_;
            const Integer den = parse_integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Integer parse_integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::pair<CellEntry, std::uint16_t> parse_power() {
        const std::size_t start = pos_;
        const std::size_t close = s_.find('}', pos_);
        if (close == std::string_view::npos) fail("expected a variable");
        const std::string name(s_.substr(start, close + 1 - start));
        pos_ = close + 1;
        const auto entry = grid_.parse_variable(name, ring_);
        if (!entry) fail("unknown variable '" + name + "'");
        std::uint16_t exp = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            const Integer e = parse_integer();
            if (e < 1 || e > 1000) fail("bad exponent");
            exp = e.convert_to<std::uint16_t>();
        }
        return {*entry, exp};
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Ring ring_;
    const VariableGrid& grid_;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, Ring ring, const VariableGrid& grid) {
    return Parser(text, ring, grid).parse();
}

} // namespace apolar
