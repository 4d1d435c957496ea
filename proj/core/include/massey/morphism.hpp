#ifndef MASSEY_MORPHISM_HPP
#define MASSEY_MORPHISM_HPP

#include "massey/dga.hpp"

namespace massey {

/* DGA morphism given by generator images of equal degree; extended as an
 * algebra map. Construction checks the chain condition f(dx) = d(f(x)) on
 * every generator and, for capped generators, compatibility with the
 * power relation. */
class DgaMorphism {
  public:
    DgaMorphism(DgaModelPtr source, DgaModelPtr target, std::vector<GradedVector> images);

    static DgaMorphism identity(const DgaModelPtr& m);

    const DgaModelPtr& source() const { return source_; }
    const DgaModelPtr& target() const { return target_; }
    const GradedVector& image_of_generator(size_t i) const { return images_[i]; }

    GradedVector apply(const GradedVector& v) const;
    CohomologyClass apply(const CohomologyClass& c) const;

  private:
    GradedVector apply_monomial(const Monomial& m) const;

    DgaModelPtr source_;
    DgaModelPtr target_;
    std::vector<GradedVector> images_;

    mutable std::mutex mutex_;
    mutable std::map<Monomial, GradedVector, MonomialLess> cache_;
};

}  // namespace massey

#endif
