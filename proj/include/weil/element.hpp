#pragma once

#include <span>
#include <vector>

#include "weil/presentation.hpp"

namespace weil {

/// An element of a Weil algebra: a dense real coefficient vector over the
/// presentation's standard-monomial basis. Elements are immutable values;
/// all arithmetic is pure.
class WeilElement {
  public:
    WeilElement(PresPtr pres, std::vector<double> coeffs);

    static WeilElement zero(const PresPtr& p);
    static WeilElement one(const PresPtr& p);
    static WeilElement constant(const PresPtr& p, double c);

    /// The variable X_index as an element; zero if the variable was killed
    /// by the ideal.
    static WeilElement variable(const PresPtr& p, int index);

    /// c times the given monomial; zero if the monomial lies in the ideal.
    static WeilElement monomial(const PresPtr& p, const Monomial& m, double c = 1.0);

    const PresPtr& presentation() const { return pres_; }
    std::span<const double> coeffs() const { return coeffs_; }
    double coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    int dim() const { return static_cast<int>(coeffs_.size()); }

    /// Coefficient of 1_A; the projection A -> R.
    double augmentation() const { return coeffs_[0]; }

    /// a - augmentation(a) * 1, the component in the maximal ideal.
    WeilElement nilpotent_part() const;

    bool is_zero() const;

    /// Invertibility in a local algebra: augmentation != 0.
    bool is_invertible() const { return coeffs_[0] != 0.0; }

    /// Multiplicative inverse via the finite geometric series
    /// (1/c) * sum_j (-n/c)^j with c the augmentation and n the nilpotent
    /// part; exact after height(A) steps. Throws on augmentation 0.
    WeilElement invert() const;

    /// Integer power by repeated squaring; negative exponents invert first.
    WeilElement pow(int exponent) const;

    WeilElement operator+(const WeilElement& rhs) const;
    WeilElement operator-(const WeilElement& rhs) const;
    WeilElement operator-() const;
    WeilElement operator*(const WeilElement& rhs) const;
    WeilElement scale(double c) const;

    bool operator==(const WeilElement& rhs) const;

  private:
    void require_same(const WeilElement& rhs) const;

    PresPtr pres_;
    std::vector<double> coeffs_;
};

inline WeilElement operator*(double c, const WeilElement& a) { return a.scale(c); }

/// Spec-level free functions.
inline WeilElement add(const WeilElement& a, const WeilElement& b) { return a + b; }
inline WeilElement scale(double c, const WeilElement& a) { return a.scale(c); }
inline WeilElement mul(const WeilElement& a, const WeilElement& b) { return a * b; }
inline double augmentation(const WeilElement& a) { return a.augmentation(); }
inline WeilElement nilpotent_part(const WeilElement& a) { return a.nilpotent_part(); }
inline bool is_invertible(const WeilElement& a) { return a.is_invertible(); }
inline WeilElement invert(const WeilElement& a) { return a.invert(); }

/// x^n over doubles by the same repeated-squaring order as element pow;
/// shared so that evaluation over the height-0 algebra reproduces real
/// evaluation bit for bit.
double ipow_double(double x, int exponent);

}  // namespace weil
