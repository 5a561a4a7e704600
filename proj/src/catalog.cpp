#include "weil/catalog.hpp"

#include <cctype>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "weil/json_io.hpp"

namespace weil {

namespace {

struct SpecParser {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("invalid algebra spec '" + text + "': " + what);
    }

    bool eat(const std::string& word) {
        if (text.compare(pos, word.size(), word) == 0) {
            pos += word.size();
            return true;
        }
        return false;
    }

    int integer() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer at position " + std::to_string(start + 1));
        return std::stoi(text.substr(start, pos - start));
    }

    void expect(char c) {
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    PresPtr spec() {
        if (eat("reals")) return make_reals();
        if (eat("dual")) return make_truncated(1, 1);
        if (eat("trunc:")) {
            int s = integer();
            expect(',');
            int k = integer();
            return make_truncated(s, k);
        }
        if (eat("tensor:")) {
            PresPtr a = spec();
            expect(',');
            PresPtr b = spec();
            return tensor(a, b);
        }
        fail("expected one of reals, dual, trunc:s,k, tensor:<a>,<b> or inline JSON");
    }
};

}  // namespace

PresPtr parse_algebra_spec(const std::string& spec) {
    std::size_t first = spec.find_first_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty algebra spec");
    if (spec[first] == '{') {
        nlohmann::json j = nlohmann::json::parse(spec, nullptr, false);
        if (j.is_discarded()) throw std::invalid_argument("invalid algebra spec: malformed JSON");
        return presentation_from_json(j);
    }
    SpecParser p{spec, first};
    PresPtr out = p.spec();
    if (p.pos != spec.find_last_not_of(" \t") + 1) p.fail("unexpected trailing input");
    return out;
}

std::vector<std::pair<std::string, PresPtr>> fixture_catalog() {
    return {
        {"reals", make_reals()},
        {"dual", make_truncated(1, 1)},
        {"trunc:1,2", make_truncated(1, 2)},
        {"trunc:1,3", make_truncated(1, 3)},
        {"tensor:dual,dual", tensor(make_truncated(1, 1), make_truncated(1, 1))},
        {"trunc:2,2", make_truncated(2, 2)},
    };
}

}  // namespace weil
