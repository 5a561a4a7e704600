#include "weil/text_input.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace weil {

namespace {

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;
    const char* what;  // label for error messages

    [[noreturn]] void fail(const std::string& detail) const {
        throw std::invalid_argument(std::string("invalid ") + what + " '" + text + "': " + detail);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (peek_is(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    double number() {
        skip_ws();
        const char* begin = text.c_str() + pos;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) fail("expected a number at position " + std::to_string(pos + 1));
        pos += static_cast<std::size_t>(end - begin);
        return v;
    }

    int digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits at position " + std::to_string(start + 1));
        return std::stoi(text.substr(start, pos - start));
    }
};

/// ('T' [index] ['^' power])+ -> exponent vector.
Monomial parse_monomial(Scanner& s, int num_vars) {
    Monomial m = Monomial::unit(num_vars);
    bool any = false;
    while (s.peek_is('T')) {
        ++s.pos;
        any = true;
        int index = 1;
        if (s.pos < s.text.size() && std::isdigit(static_cast<unsigned char>(s.text[s.pos]))) index = s.digits();
        else if (num_vars != 1) s.fail("monomial 'T' needs a variable index in a multivariate algebra");
        if (index < 1 || index > num_vars) s.fail("variable T" + std::to_string(index) + " out of range");
        int power = 1;
        if (s.eat('^')) power = s.digits();
        m.exponents[static_cast<std::size_t>(index - 1)] += power;
    }
    if (!any) s.fail("expected a monomial at position " + std::to_string(s.pos + 1));
    return m;
}

}  // namespace

WeilElement parse_element_text(const PresPtr& algebra, const std::string& text) {
    Scanner s{text, 0, "element"};
    WeilElement out = WeilElement::zero(algebra);
    bool first = true;
    while (!s.done()) {
        double sign = 1.0;
        if (s.eat('+')) sign = 1.0;
        else if (s.eat('-')) sign = -1.0;
        else if (!first) s.fail("expected '+' or '-' between terms");
        first = false;

        s.skip_ws();
        bool has_number = s.pos < s.text.size() &&
                          (std::isdigit(static_cast<unsigned char>(s.text[s.pos])) || s.text[s.pos] == '.');
        double coeff = has_number ? s.number() : 1.0;
        Monomial m = Monomial::unit(algebra->num_vars());
        if (s.peek_is('T')) m = parse_monomial(s, algebra->num_vars());
        else if (!has_number) s.fail("expected a coefficient or monomial");
        if (algebra->basis_index(m) < 0) s.fail("monomial not in basis: " + monomial_name(m));
        out = out + WeilElement::monomial(algebra, m, sign * coeff);
    }
    return out;
}

NearPoint parse_near_point_text(const PresPtr& algebra, int chart_dim, const std::string& text) {
    NearPoint xi{algebra, std::vector<WeilElement>(static_cast<std::size_t>(chart_dim), WeilElement::zero(algebra))};
    std::vector<bool> seen(static_cast<std::size_t>(chart_dim), false);

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t split = text.find_first_of(",;", start);
        std::string part = text.substr(start, split == std::string::npos ? std::string::npos : split - start);

        Scanner s{part, 0, "near point"};
        if (!s.done()) {
            if (!s.eat('x')) s.fail("expected an assignment 'x<i>=...'");
            int index = s.digits();
            if (index < 1 || index > chart_dim) s.fail("variable x" + std::to_string(index) + " out of range");
            if (seen[static_cast<std::size_t>(index - 1)]) s.fail("variable x" + std::to_string(index) + " assigned twice");
            seen[static_cast<std::size_t>(index - 1)] = true;
            if (!s.eat('=')) s.fail("expected '='");
            xi.coords[static_cast<std::size_t>(index - 1)] = parse_element_text(algebra, part.substr(s.pos));
        }
        if (split == std::string::npos) break;
        start = split + 1;
    }
    for (int i = 0; i < chart_dim; ++i)
        if (!seen[static_cast<std::size_t>(i)])
            throw std::invalid_argument("invalid near point '" + text + "': variable x" + std::to_string(i + 1) +
                                        " not assigned");
    return xi;
}

SampleRegion parse_region_text(const std::string& text, int chart_dim) {
    SampleRegion region;
    region.box.assign(static_cast<std::size_t>(chart_dim), {0.0, 0.0});
    std::vector<bool> seen(static_cast<std::size_t>(chart_dim), false);

    Scanner s{text, 0, "region"};
    while (!s.done()) {
        if (!s.eat('x')) s.fail("expected 'x<i>:[a,b]'");
        int index = s.digits();
        if (index < 1 || index > chart_dim) s.fail("variable x" + std::to_string(index) + " out of range");
        if (seen[static_cast<std::size_t>(index - 1)]) s.fail("variable x" + std::to_string(index) + " given twice");
        seen[static_cast<std::size_t>(index - 1)] = true;
        if (!s.eat(':')) s.fail("expected ':'");
        if (!s.eat('[')) s.fail("expected '['");
        double lo = s.number();
        if (!s.eat(',')) s.fail("expected ','");
        double hi = s.number();
        if (!s.eat(']')) s.fail("expected ']'");
        if (hi < lo) s.fail("empty interval for x" + std::to_string(index));
        region.box[static_cast<std::size_t>(index - 1)] = {lo, hi};
        if (!s.done() && !s.eat(',')) s.fail("expected ',' between intervals");
    }
    for (int i = 0; i < chart_dim; ++i)
        if (!seen[static_cast<std::size_t>(i)])
            throw std::invalid_argument("invalid region '" + text + "': no interval for x" + std::to_string(i + 1));
    return region;
}

}  // namespace weil
