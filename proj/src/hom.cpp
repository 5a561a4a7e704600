#include "weil/hom.hpp"

#include <cmath>
#include <stdexcept>

namespace weil {

namespace {

/// Evaluate a monomial at the images (product of image powers in the
/// target algebra).
WeilElement eval_monomial(const Monomial& m, const PresPtr& target, const std::vector<WeilElement>& images) {
    WeilElement out = WeilElement::one(target);
    for (int v = 0; v < m.num_vars(); ++v) {
        int e = m.exponents[static_cast<std::size_t>(v)];
        if (e > 0) out = out * images[static_cast<std::size_t>(v)].pow(e);
    }
    return out;
}

double inf_norm(const WeilElement& a) {
    double m = 0.0;
    for (double c : a.coeffs()) m = std::max(m, std::fabs(c));
    return m;
}

/// A generator evaluates to zero when its image vanishes up to roundoff
/// relative to the sizes of the image factors.
bool vanishes(const WeilElement& value, const Monomial& g, const std::vector<WeilElement>& images) {
    double scale = 1.0;
    for (int v = 0; v < g.num_vars(); ++v) {
        int e = g.exponents[static_cast<std::size_t>(v)];
        for (int r = 0; r < e; ++r) scale *= std::max(1.0, inf_norm(images[static_cast<std::size_t>(v)]));
    }
    return inf_norm(value) <= 1e-12 * scale;
}

void enumerate_degree(std::vector<int>& exps, int var, int remaining, std::vector<Monomial>& out) {
    if (var == static_cast<int>(exps.size()) - 1) {
        exps[static_cast<std::size_t>(var)] = remaining;
        out.emplace_back(exps);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        exps[static_cast<std::size_t>(var)] = e;
        enumerate_degree(exps, var + 1, remaining - e, out);
    }
}

}  // namespace

AlgebraHom::AlgebraHom(PresPtr source, PresPtr target, std::vector<WeilElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_->num_vars())
        throw std::invalid_argument("need one image per source variable");
    for (const WeilElement& img : images_) {
        if (!same_presentation(img.presentation(), target_)) throw std::invalid_argument("image not in target algebra");
        if (img.augmentation() != 0.0) throw std::invalid_argument("image not in maximal ideal");
    }

    // Every ideal generator of the source must map to zero. Images in the
    // maximal ideal already kill the truncation generators whenever
    // height(target) <= trunc_order(source); otherwise evaluate them too.
    for (const Monomial& g : source_->extra_gens()) {
        WeilElement value = eval_monomial(g, target_, images_);
        if (!vanishes(value, g, images_))
            throw std::invalid_argument("relation not preserved: " + monomial_name(g));
    }
    if (target_->height() > source_->trunc_order() && source_->num_vars() > 0) {
        std::vector<Monomial> top;
        std::vector<int> exps(static_cast<std::size_t>(source_->num_vars()), 0);
        enumerate_degree(exps, 0, source_->trunc_order() + 1, top);
        for (const Monomial& g : top) {
            WeilElement value = eval_monomial(g, target_, images_);
            if (!vanishes(value, g, images_))
                throw std::invalid_argument("relation not preserved: " + monomial_name(g));
        }
    }

    // Precompute the image of every source basis monomial. The basis is
    // divisibility-closed and graded, so each non-unit monomial is a
    // previously computed one times a single variable.
    basis_images_.reserve(static_cast<std::size_t>(source_->dim()));
    for (int i = 0; i < source_->dim(); ++i) {
        const Monomial& m = source_->basis()[static_cast<std::size_t>(i)];
        if (m.is_unit()) {
            basis_images_.push_back(WeilElement::one(target_));
            continue;
        }
        int v = 0;
        while (m.exponents[static_cast<std::size_t>(v)] == 0) ++v;
        Monomial prev = m;
        --prev.exponents[static_cast<std::size_t>(v)];
        int pi = source_->basis_index(prev);
        basis_images_.push_back(basis_images_[static_cast<std::size_t>(pi)] * images_[static_cast<std::size_t>(v)]);
    }
}

WeilElement AlgebraHom::apply(const WeilElement& a) const {
    if (!same_presentation(a.presentation(), source_)) throw std::invalid_argument("presentation mismatch");
    WeilElement out = WeilElement::zero(target_);
    for (int i = 0; i < source_->dim(); ++i) {
        double c = a.coeff(i);
        if (c != 0.0) out = out + basis_images_[static_cast<std::size_t>(i)].scale(c);
    }
    return out;
}

AlgebraHom AlgebraHom::identity(const PresPtr& p) {
    std::vector<WeilElement> images;
    images.reserve(static_cast<std::size_t>(p->num_vars()));
    for (int v = 0; v < p->num_vars(); ++v) images.push_back(WeilElement::variable(p, v));
    return AlgebraHom(p, p, std::move(images));
}

AlgebraHom AlgebraHom::augmentation_hom(const PresPtr& p) {
    PresPtr r = make_reals();
    std::vector<WeilElement> images(static_cast<std::size_t>(p->num_vars()), WeilElement::zero(r));
    return AlgebraHom(p, std::move(r), std::move(images));
}

AlgebraHom make_hom(const PresPtr& source, const PresPtr& target, std::vector<WeilElement> images) {
    return AlgebraHom(source, target, std::move(images));
}

}  // namespace weil
