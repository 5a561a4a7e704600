#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace weil {

/// A monomial in s variables, stored as its exponent vector.
/// The all-zero vector is the unit monomial 1.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    static Monomial unit(int num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }

    static Monomial var(int num_vars, int index, int power = 1) {
        Monomial m = unit(num_vars);
        m.exponents[static_cast<std::size_t>(index)] = power;
        return m;
    }

    int num_vars() const { return static_cast<int>(exponents.size()); }

    int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

    bool is_unit() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        if (exponents.size() != m.exponents.size()) return false;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > m.exponents[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial out(*this);
        for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] += m.exponents[i];
        return out;
    }

    bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// lexicographically larger exponent vectors first, so T1 precedes T2 and
/// bases list as 1, T1, T2, T1^2, T1T2, T2^2, ...
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents > b.exponents;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int e : m.exponents) {
            h ^= static_cast<std::uint64_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Human-readable name: "1" for the unit, otherwise variable powers.
/// Single-variable algebras use "T"; multivariate ones use "T1", "T2", ...
/// e.g. "T^2", "T1T2", "T1^2T3".
std::string monomial_name(const Monomial& m);

}  // namespace weil
