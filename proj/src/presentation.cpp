#include "weil/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace weil {

namespace {

void enumerate_rec(std::vector<int>& exps, int var, int remaining, std::vector<Monomial>& out) {
    if (var == static_cast<int>(exps.size())) {
        out.emplace_back(exps);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        exps[static_cast<std::size_t>(var)] = e;
        enumerate_rec(exps, var + 1, remaining - e, out);
    }
    exps[static_cast<std::size_t>(var)] = 0;
}

/// All monomials in `num_vars` variables of total degree <= max_degree.
std::vector<Monomial> monomials_up_to(int num_vars, int max_degree) {
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(num_vars), 0);
    enumerate_rec(exps, 0, max_degree, out);
    return out;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

/// Drop generators of degree > trunc_order (already killed by the
/// truncation) and generators divisible by another one, then sort.
std::vector<Monomial> normalize_gens(int num_vars, int trunc_order, std::vector<Monomial> gens) {
    for (const Monomial& g : gens) {
        if (g.num_vars() != num_vars) throw std::invalid_argument("generator has wrong variable count");
        if (g.degree() == 0) throw std::invalid_argument("ideal not proper");
    }
    std::erase_if(gens, [&](const Monomial& g) { return g.degree() > trunc_order; });
    std::sort(gens.begin(), gens.end(), graded_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) kept.push_back(gens[i]);
    }
    return kept;
}

}  // namespace

Presentation::Presentation(int num_vars, int trunc_order, std::vector<Monomial> extra_gens)
    : num_vars_(num_vars), trunc_order_(trunc_order), extra_gens_(std::move(extra_gens)) {
    basis_ = monomials_up_to(num_vars_, trunc_order_);
    std::erase_if(basis_, [&](const Monomial& m) { return divisible_by_any(m, extra_gens_); });
    std::sort(basis_.begin(), basis_.end(), graded_lex_less);

    height_ = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        index_.emplace(basis_[i], static_cast<int>(i));
        height_ = std::max(height_, basis_[i].degree());
    }

    const std::size_t n = basis_.size();
    mul_table_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            int k = basis_index(basis_[i] * basis_[j]);
            mul_table_[i * n + j] = k;
            mul_table_[j * n + i] = k;
        }
}

int Presentation::basis_index(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

bool Presentation::same_algebra(const Presentation& other) const {
    return num_vars_ == other.num_vars_ && basis_ == other.basis_;
}

PresPtr Presentation::make(int num_vars, int trunc_order, std::vector<Monomial> extra_gens) {
    if (num_vars < 0) throw std::invalid_argument("variable count must be non-negative");
    if (trunc_order < 0) throw std::invalid_argument("truncation order must be non-negative");
    return PresPtr(new Presentation(num_vars, trunc_order, normalize_gens(num_vars, trunc_order, std::move(extra_gens))));
}

PresPtr Presentation::truncated(int num_vars, int trunc_order) {
    if (num_vars <= 0) throw std::invalid_argument("truncated algebra needs at least one variable; use reals() for R");
    if (trunc_order < 0) throw std::invalid_argument("truncation order must be non-negative");
    return make(num_vars, trunc_order, {});
}

PresPtr Presentation::reals() { return make(0, 0, {}); }

PresPtr make_truncated(int num_vars, int trunc_order) { return Presentation::truncated(num_vars, trunc_order); }

PresPtr make_reals() { return Presentation::reals(); }

PresPtr quotient_by_monomials(const PresPtr& p, std::vector<Monomial> gens) {
    for (const Monomial& g : gens) {
        if (g.num_vars() != p->num_vars()) throw std::invalid_argument("generator has wrong variable count");
        if (g.degree() == 0) throw std::invalid_argument("ideal not proper");
        if (g.degree() > p->trunc_order())
            throw std::invalid_argument("generator degree exceeds truncation order");
    }
    std::vector<Monomial> all = p->extra_gens();
    all.insert(all.end(), gens.begin(), gens.end());
    return Presentation::make(p->num_vars(), p->trunc_order(), std::move(all));
}

namespace {

/// Generators that present A inside a larger algebra truncated at
/// `ambient_order`: A's own extra generators plus, when nothing else caps
/// its top degree, the pure degree-(k+1) monomials.
void block_generators(const Presentation& p, int offset, int total_vars, int ambient_order,
                      std::vector<Monomial>& out) {
    auto embed = [&](const Monomial& g) {
        Monomial m = Monomial::unit(total_vars);
        for (int v = 0; v < p.num_vars(); ++v)
            m.exponents[static_cast<std::size_t>(offset + v)] = g.exponents[static_cast<std::size_t>(v)];
        return m;
    };
    for (const Monomial& g : p.extra_gens()) out.push_back(embed(g));
    if (p.num_vars() > 0 && p.height() == p.trunc_order() && p.trunc_order() + 1 <= ambient_order) {
        // every block monomial of degree k+1 must still die at the larger
        // ambient truncation order
        std::vector<int> exps(static_cast<std::size_t>(p.num_vars()), 0);
        std::vector<Monomial> all;
        enumerate_rec(exps, 0, p.trunc_order() + 1, all);
        for (const Monomial& m : all)
            if (m.degree() == p.trunc_order() + 1) out.push_back(embed(m));
    }
}

}  // namespace

PresPtr tensor(const PresPtr& a, const PresPtr& b) {
    const int vars = a->num_vars() + b->num_vars();
    const int order = a->height() + b->height();
    std::vector<Monomial> gens;
    block_generators(*a, 0, vars, order, gens);
    block_generators(*b, a->num_vars(), vars, order, gens);
    return Presentation::make(vars, order, std::move(gens));
}

bool same_presentation(const PresPtr& a, const PresPtr& b) {
    return a == b || (a && b && a->same_algebra(*b));
}

}  // namespace weil
