#include "massey/morphism.hpp"

namespace massey {

DgaMorphism::DgaMorphism(DgaModelPtr source, DgaModelPtr target,
                         std::vector<GradedVector> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    const auto& sp = source_->presentation();
    const auto& tp = target_->presentation();
    if (images_.size() != sp->generator_count())
        throw invalid_morphism("image required for every source generator");
    for (size_t i = 0; i < images_.size(); ++i) {
        const auto& g = sp->generator(i);
        if (images_[i].is_zero()) {
            images_[i] = GradedVector::zero(tp, g.degree);
            continue;
        }
        Presentation::require_same(tp, images_[i].presentation());
        if (images_[i].degree() != g.degree)
            throw invalid_morphism("image of '" + g.name + "' must have degree " +
                                   std::to_string(g.degree));
    }
    // Chain condition on generators; multiplicativity extends it.
    for (size_t i = 0; i < images_.size(); ++i) {
        GradedVector lhs = apply(source_->differential_of_generator(i));
        GradedVector rhs = target_->d(images_[i]);
        if (lhs != rhs)
            throw invalid_morphism("morphism does not commute with d on '" +
                                   sp->generator(i).name + "'");
    }
    // Power relations of capped source generators must map to relations.
    for (size_t i = 0; i < sp->generator_count(); ++i) {
        const auto* cap = sp->capped_power(i);
        if (!cap) continue;
        GradedVector pow = GradedVector::unit(tp);
        for (int t = 0; t < cap->cap; ++t) pow = pow * images_[i];
        GradedVector rhs = GradedVector::zero(tp, pow.degree());
        for (const auto& [m, c] : cap->rewrite)
            rhs = rhs + apply_monomial(m).scaled(c);
        if (pow != rhs)
            throw invalid_morphism("morphism violates the power relation of '" +
                                   sp->generator(i).name + "'");
    }
}

DgaMorphism DgaMorphism::identity(const DgaModelPtr& m) {
    std::vector<GradedVector> images;
    for (size_t i = 0; i < m->presentation()->generator_count(); ++i)
        images.push_back(GradedVector::generator(m->presentation(), i));
    return DgaMorphism(m, m, std::move(images));
}

GradedVector DgaMorphism::apply_monomial(const Monomial& m) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
    }
    const auto& tp = target_->presentation();
    GradedVector acc = GradedVector::unit(tp);
    for (size_t i = 0; i < m.exps.size(); ++i) {
        for (int t = 0; t < int(m.exps[i]); ++t) acc = acc * images_[i];
    }
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(m, acc);
    return acc;
}

GradedVector DgaMorphism::apply(const GradedVector& v) const {
    Presentation::require_same(source_->presentation(), v.presentation());
    GradedVector out = GradedVector::zero(target_->presentation(), v.degree());
    for (const auto& [m, c] : v.terms()) out = out + apply_monomial(m).scaled(c);
    return out;
}

CohomologyClass DgaMorphism::apply(const CohomologyClass& c) const {
    return target_->reduce_to_class(apply(c.rep()));
}

}  // namespace massey
