#include "massey/projectivization.hpp"

#include "massey/lie.hpp"

namespace massey {

ChernData ChernData::zero(const DgaModelPtr& base, int k) {
    ChernData c;
    c.k = k;
    for (int i = 1; i <= k + 1; ++i)
        c.classes.push_back(GradedVector::zero(base->presentation(), 2 * i));
    return c;
}

namespace {

GradedVector widen(const PresentationPtr& ext, const GradedVector& v) {
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (const auto& [m, c] : v.terms()) {
        Monomial w = m;
        w.exps.resize(ext->generator_count(), 0);
        terms.emplace_back(std::move(w), c);
    }
    return GradedVector::from_terms(ext, v.degree(), std::move(terms));
}

}  // namespace

ProjectivizationModel::ProjectivizationModel(DgaModelPtr base, DgaModelPtr total,
                                             size_t xi_index, int k, ChernData chern)
    : base_(std::move(base)),
      total_(std::move(total)),
      xi_index_(xi_index),
      k_(k),
      chern_(std::move(chern)),
      pullback_([&] {
          std::vector<GradedVector> images;
          for (size_t i = 0; i < base_->presentation()->generator_count(); ++i)
              images.push_back(GradedVector::generator(total_->presentation(), i));
          return DgaMorphism(base_, total_, std::move(images));
      }()) {}

GradedVector ProjectivizationModel::xi() const {
    return GradedVector::generator(total_->presentation(), xi_index_);
}

CohomologyClass ProjectivizationModel::pull(const CohomologyClass& base_class) const {
    return pullback_.apply(base_class);
}

CohomologyClass ProjectivizationModel::xi_times(int power, const CohomologyClass& base_class) const {
    if (power < 0) throw engine_error("negative xi power");
    GradedVector v = pullback_.apply(base_class.rep());
    if (base_class.is_zero())
        v = GradedVector::zero(total_->presentation(), base_class.degree());
    GradedVector x = xi();
    for (int t = 0; t < power; ++t) v = x * v;
    if (v.is_zero())
        v = GradedVector::zero(total_->presentation(), base_class.degree() + 2 * power);
    return total_->reduce_to_class(v);
}

std::vector<CohomologyClass> ProjectivizationModel::decompose(const CohomologyClass& a) const {
    Presentation::require_same(total_->presentation(), a.rep().presentation());
    const auto& bp = base_->presentation();
    size_t nbase = bp->generator_count();
    std::vector<std::vector<std::pair<Monomial, Scalar>>> buckets(size_t(k_) + 1);
    for (const auto& [m, c] : a.rep().terms()) {
        int e = m.exps[xi_index_];
        Monomial narrowed;
        narrowed.exps.assign(m.exps.begin(), m.exps.begin() + nbase);
        buckets[size_t(e)].emplace_back(std::move(narrowed), c);
    }
    std::vector<CohomologyClass> out;
    for (int e = 0; e <= k_; ++e) {
        int deg = a.degree() - 2 * e;
        if (deg < 0 || deg > base_->truncation()) {
            if (!buckets[size_t(e)].empty())
                throw engine_error("component degree outside the base truncation");
            out.push_back(base_->zero_class(std::max(deg, 0)));
            continue;
        }
        GradedVector comp = GradedVector::from_terms(bp, deg, std::move(buckets[size_t(e)]));
        out.push_back(base_->reduce_to_class(comp));
    }
    return out;
}

CohomologyClass ProjectivizationModel::reassemble(const std::vector<CohomologyClass>& components) const {
    if (components.empty()) throw engine_error("nothing to reassemble");
    int degree = components.front().degree();
    GradedVector acc = GradedVector::zero(total_->presentation(), degree);
    GradedVector x = xi();
    for (size_t e = 0; e < components.size(); ++e) {
        if (components[e].is_zero()) continue;
        GradedVector v = pullback_.apply(components[e].rep());
        for (size_t t = 0; t < e; ++t) v = x * v;
        acc = acc + v;
    }
    return total_->reduce_to_class(acc);
}

std::vector<ProjectivizationModel::DimensionCheck> ProjectivizationModel::leray_hirsch_report() const {
    std::vector<DimensionCheck> out;
    for (int n = 0; n <= total_->truncation(); ++n) {
        int total_dim = total_->betti(n);
        int sum = 0;
        for (int i = 0; i <= k_; ++i) sum += base_->betti(n - 2 * i);
        out.push_back({n, total_dim, sum, total_dim == sum});
    }
    return out;
}

ProjectivizationModel projectivize(const DgaModelPtr& base, const ChernData& chern) {
    int k = chern.k;
    if (k < 1) throw engine_error("fiber dimension k must be at least 1");
    if (chern.classes.size() > size_t(k) + 1)
        throw engine_error("expected at most k+1 characteristic classes");
    std::vector<GradedVector> cs = chern.classes;
    while (cs.size() < size_t(k) + 1)
        cs.push_back(GradedVector::zero(base->presentation(), 2 * (int(cs.size()) + 1)));
    for (int i = 1; i <= k + 1; ++i) {
        const GradedVector& ci = cs[size_t(i) - 1];
        if (ci.is_zero()) continue;
        Presentation::require_same(base->presentation(), ci.presentation());
        if (ci.degree() != 2 * i)
            throw engine_error("characteristic class c_" + std::to_string(i) +
                               " must have degree " + std::to_string(2 * i));
        if (!base->is_cocycle(ci))
            throw not_a_cocycle("characteristic class c_" + std::to_string(i) +
                                " is not a cocycle");
    }

    const auto& bp = base->presentation();
    std::string name = "xi";
    for (int suffix = 2; bp->generator_index(name); ++suffix)
        name = "xi" + std::to_string(suffix);
    auto ext = Presentation::extend(*bp, {name, 2}, k + 1, base->truncation() + 2 * k);
    size_t xi_idx = ext->generator_count() - 1;

    // xi^{k+1} = -sum_{i=1}^{k+1} c_i xi^{k+1-i}
    std::vector<std::pair<Monomial, Scalar>> rewrite;
    for (int i = 1; i <= k + 1; ++i) {
        for (const auto& [m, s] : cs[size_t(i) - 1].terms()) {
            Monomial w = m;
            w.exps.resize(ext->generator_count(), 0);
            w.exps[xi_idx] = uint16_t(k + 1 - i);
            rewrite.emplace_back(std::move(w), -s);
        }
    }
    ext->set_rewrite(xi_idx, std::move(rewrite));
    PresentationPtr ext_const = ext;

    std::vector<GradedVector> diffs;
    for (size_t i = 0; i < bp->generator_count(); ++i)
        diffs.push_back(widen(ext_const, base->differential_of_generator(i)));
    diffs.push_back(GradedVector::zero(ext_const, 3));  // d(xi) = 0

    DgaModelPtr total = free_cdga(ext_const, std::move(diffs));
    return ProjectivizationModel(base, total, xi_idx, k, chern);
}

LiftIdealOutcome lift_ideal_check(const ProjectivizationModel& E, const CohomologyClass& x,
                                  const std::vector<CohomologyClass>& gens, int n) {
    if (n > E.fiber_dimension())
        throw exponent_too_large("xi exponent " + std::to_string(n) +
                                 " exceeds the fiber dimension " +
                                 std::to_string(E.fiber_dimension()));
    if (n < 0) throw engine_error("negative xi exponent");

    const DgaModel& base = *E.base();
    const DgaModel& total = *E.total();

    CohomologyClass upstairs_class = E.xi_times(n, x);
    std::vector<CohomologyClass> up_gens;
    for (const auto& g : gens) up_gens.push_back(E.pull(g));
    SubspaceBasis up_slice = total.ideal_slice(up_gens, upstairs_class.degree());
    bool upstairs = upstairs_class.is_zero() || total.member(upstairs_class, up_slice).member;

    SubspaceBasis down_slice = base.ideal_slice(gens, x.degree());
    bool downstairs = x.is_zero() || base.member(x, down_slice).member;

    if (upstairs && !downstairs)
        throw engine_error("ideal lifting invariant violated: membership holds in the "
                           "projectivization but not on the base");
    return {upstairs, downstairs};
}

MasseyVerdict transferred_massey(const ProjectivizationModel& E, const CohomologyClass& a,
                                 const CohomologyClass& b, const CohomologyClass& c,
                                 int l, int m, int n) {
    if (l < 0 || m < 0 || n < 0 || l + m + n > E.fiber_dimension())
        throw hypothesis_failure("exponents must be non-negative with l+m+n <= k (got " +
                                 std::to_string(l) + "+" + std::to_string(m) + "+" +
                                 std::to_string(n) + " vs k = " +
                                 std::to_string(E.fiber_dimension()) + ")");
    MasseyVerdict base_verdict = triple_massey(*E.base(), a, b, c);
    if (base_verdict.essential != Essentiality::Essential)
        throw hypothesis_failure("the base triple product is not essential (it is " +
                                 to_string(base_verdict.essential) + ")");

    CohomologyClass A = E.xi_times(l, a);
    CohomologyClass B = E.xi_times(m, b);
    CohomologyClass C = E.xi_times(n, c);
    MasseyVerdict up = triple_massey(*E.total(), A, B, C);
    if (up.essential != Essentiality::Essential)
        throw engine_error("transfer guarantee violated: the lifted triple product "
                           "failed to be essential");
    return up;
}

}  // namespace massey
