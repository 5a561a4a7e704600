#pragma once

#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "weil/monomial.hpp"

namespace weil {

class Presentation;
using PresPtr = std::shared_ptr<const Presentation>;

/// A local (Weil) algebra presented by monomial relations:
///
///   A = R[X1..Xs] / ( (X1..Xs)^{k+1} + extra monomial generators )
///
/// The standard monomials (degree <= k, divisible by no extra generator)
/// form the canonical basis, ordered graded-lexicographically with the
/// unit first. Every product of basis monomials is either again a basis
/// monomial or reduces to zero, so the full multiplication table is
/// precomputed at construction.
///
/// Presentations are immutable once built and shared via PresPtr.
class Presentation {
  public:
    /// Truncated polynomial algebra R[X1..Xs]/(X1..Xs)^{k+1}.
    /// dim = C(s+k, k). Rejects s <= 0; use reals() for the trivial algebra.
    static PresPtr truncated(int num_vars, int trunc_order);

    /// The degenerate height-0 algebra R (no variables, basis {1}).
    static PresPtr reals();

    /// General constructor from the serialized form: variable count,
    /// truncation order and extra monomial generators of the ideal.
    /// Generators of degree 0 are rejected ("ideal not proper");
    /// generators of degree > trunc_order are rejected.
    static PresPtr make(int num_vars, int trunc_order, std::vector<Monomial> extra_gens);

    int num_vars() const { return num_vars_; }
    int trunc_order() const { return trunc_order_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    /// Largest total degree among basis monomials; equals the largest h
    /// with m^h != 0 for the maximal ideal m.
    int height() const { return height_; }

    const std::vector<Monomial>& extra_gens() const { return extra_gens_; }
    const std::vector<Monomial>& basis() const { return basis_; }

    /// Index of a monomial in the basis, or -1 if it lies in the ideal.
    int basis_index(const Monomial& m) const;

    /// Index of basis[i]*basis[j] in the basis, or -1 if the product
    /// reduces to zero.
    int product_index(int i, int j) const { return mul_table_[static_cast<std::size_t>(i) * basis_.size() + static_cast<std::size_t>(j)]; }

    /// Name of basis monomial i ("1", "T", "T1T2^2", ...).
    std::string basis_name(int i) const { return monomial_name(basis_[static_cast<std::size_t>(i)]); }

    /// Structural equality: same variable count and identical basis.
    /// Two presentations with the same basis present the same algebra,
    /// whatever their truncation orders and generator sets.
    bool same_algebra(const Presentation& other) const;

  private:
    Presentation(int num_vars, int trunc_order, std::vector<Monomial> extra_gens);

    int num_vars_;
    int trunc_order_;
    int height_;
    std::vector<Monomial> extra_gens_;
    std::vector<Monomial> basis_;
    std::unordered_map<Monomial, int, MonomialHash> index_;
    std::vector<std::int32_t> mul_table_;
};

/// Spec-level constructors.
PresPtr make_truncated(int num_vars, int trunc_order);
PresPtr make_reals();

/// Quotient by additional monomial generators (each of degree >= 1 and
/// <= trunc_order of p).
PresPtr quotient_by_monomials(const PresPtr& p, std::vector<Monomial> gens);

/// Tensor product A (x) B: variables are the disjoint union (A block
/// first), truncation order height(A)+height(B), and the basis is exactly
/// { mA * mB }. dim multiplies and height adds.
PresPtr tensor(const PresPtr& a, const PresPtr& b);

/// True when the two handles denote the same algebra (pointer equality or
/// structural equality of bases).
bool same_presentation(const PresPtr& a, const PresPtr& b);

}  // namespace weil
