#include "weil/monomial.hpp"

namespace weil {

std::string monomial_name(const Monomial& m) {
    if (m.is_unit()) return "1";
    const bool single = m.num_vars() == 1;
    std::string out;
    for (int v = 0; v < m.num_vars(); ++v) {
        int e = m.exponents[static_cast<std::size_t>(v)];
        if (e == 0) continue;
        out += single ? "T" : "T" + std::to_string(v + 1);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace weil
