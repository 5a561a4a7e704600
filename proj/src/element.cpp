#include "weil/element.hpp"

#include <cmath>
#include <stdexcept>

namespace weil {

WeilElement::WeilElement(PresPtr pres, std::vector<double> coeffs) : pres_(std::move(pres)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != pres_->dim())
        throw std::invalid_argument("coefficient count does not match basis size");
}

WeilElement WeilElement::zero(const PresPtr& p) { return WeilElement(p, std::vector<double>(static_cast<std::size_t>(p->dim()), 0.0)); }

WeilElement WeilElement::one(const PresPtr& p) { return constant(p, 1.0); }

WeilElement WeilElement::constant(const PresPtr& p, double c) {
    std::vector<double> coeffs(static_cast<std::size_t>(p->dim()), 0.0);
    coeffs[0] = c;
    return WeilElement(p, std::move(coeffs));
}

WeilElement WeilElement::variable(const PresPtr& p, int index) {
    if (index < 0 || index >= p->num_vars()) throw std::invalid_argument("variable index out of range");
    return monomial(p, Monomial::var(p->num_vars(), index));
}

WeilElement WeilElement::monomial(const PresPtr& p, const Monomial& m, double c) {
    if (m.num_vars() != p->num_vars()) throw std::invalid_argument("monomial has wrong variable count");
    WeilElement out = zero(p);
    int k = p->basis_index(m);
    if (k >= 0) out.coeffs_[static_cast<std::size_t>(k)] = c;
    return out;
}

void WeilElement::require_same(const WeilElement& rhs) const {
    if (!same_presentation(pres_, rhs.pres_)) throw std::invalid_argument("presentation mismatch");
}

WeilElement WeilElement::nilpotent_part() const {
    WeilElement out(*this);
    out.coeffs_[0] = 0.0;
    return out;
}

bool WeilElement::is_zero() const {
    for (double c : coeffs_)
        if (c != 0.0) return false;
    return true;
}

WeilElement WeilElement::operator+(const WeilElement& rhs) const {
    require_same(rhs);
    WeilElement out(*this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
    return out;
}

WeilElement WeilElement::operator-(const WeilElement& rhs) const {
    require_same(rhs);
    WeilElement out(*this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= rhs.coeffs_[i];
    return out;
}

WeilElement WeilElement::operator-() const {
    WeilElement out(*this);
    for (double& c : out.coeffs_) c = -c;
    return out;
}

WeilElement WeilElement::scale(double c) const {
    WeilElement out(*this);
    for (double& v : out.coeffs_) v *= c;
    return out;
}

WeilElement WeilElement::operator*(const WeilElement& rhs) const {
    require_same(rhs);
    const std::size_t n = coeffs_.size();
    std::vector<double> out(n, 0.0);
    const Presentation& p = *pres_;
    for (std::size_t i = 0; i < n; ++i) {
        const double ai = coeffs_[i];
        if (ai == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            int k = p.product_index(static_cast<int>(i), static_cast<int>(j));
            if (k >= 0) out[static_cast<std::size_t>(k)] += ai * rhs.coeffs_[j];
        }
    }
    return WeilElement(pres_, std::move(out));
}

bool WeilElement::operator==(const WeilElement& rhs) const {
    return same_presentation(pres_, rhs.pres_) && coeffs_ == rhs.coeffs_;
}

WeilElement WeilElement::invert() const {
    const double c = coeffs_[0];
    if (c == 0.0) throw std::domain_error("not invertible: augmentation is 0");
    // 1/(c + n) = (1/c) * sum_{j=0}^{h} (-n/c)^j, exact since n^{h+1} = 0
    const WeilElement step = nilpotent_part().scale(-1.0 / c);
    WeilElement acc = one(pres_);
    WeilElement power = one(pres_);
    for (int j = 1; j <= pres_->height(); ++j) {
        power = power * step;
        if (power.is_zero()) break;
        acc = acc + power;
    }
    return acc.scale(1.0 / c);
}

double ipow_double(double x, int exponent) {
    if (exponent < 0) return 1.0 / ipow_double(x, -exponent);
    double result = 1.0;
    double base = x;
    int n = exponent;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

WeilElement WeilElement::pow(int exponent) const {
    if (dim() == 1) {
        if (exponent < 0 && coeffs_[0] == 0.0) throw std::domain_error("not invertible: augmentation is 0");
        return WeilElement(pres_, {ipow_double(coeffs_[0], exponent)});
    }
    if (exponent < 0) return invert().pow(-exponent);
    WeilElement result = one(pres_);
    WeilElement base = *this;
    int n = exponent;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

}  // namespace weil
