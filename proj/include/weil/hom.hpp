#pragma once

#include <vector>

#include "weil/element.hpp"
#include "weil/presentation.hpp"

namespace weil {

/// A homomorphism of local algebras A -> B, determined by the images of
/// A's variables. Construction validates that every image lies in the
/// maximal ideal of B and that every ideal generator of A evaluates to
/// zero at the images.
class AlgebraHom {
  public:
    AlgebraHom(PresPtr source, PresPtr target, std::vector<WeilElement> images);

    const PresPtr& source() const { return source_; }
    const PresPtr& target() const { return target_; }
    const std::vector<WeilElement>& images() const { return images_; }

    /// The induced linear map: evaluate each basis monomial at the images
    /// and combine. Unital and multiplicative.
    WeilElement apply(const WeilElement& a) const;

    static AlgebraHom identity(const PresPtr& p);

    /// The augmentation A -> R, every variable to 0.
    static AlgebraHom augmentation_hom(const PresPtr& p);

  private:
    PresPtr source_;
    PresPtr target_;
    std::vector<WeilElement> images_;
    // images evaluated at every source basis monomial, precomputed
    std::vector<WeilElement> basis_images_;
};

AlgebraHom make_hom(const PresPtr& source, const PresPtr& target, std::vector<WeilElement> images);
inline WeilElement hom_apply(const AlgebraHom& h, const WeilElement& a) { return h.apply(a); }

}  // namespace weil
