#ifndef MASSEY_PROJECTIVIZATION_HPP
#define MASSEY_PROJECTIVIZATION_HPP

#include "massey/massey.hpp"

namespace massey {

/* Characteristic data of a rank-(k+1) bundle at the model level: base
 * cocycles c_1, ..., c_{k+1} with deg c_i = 2i; entries may be zero. */
struct ChernData {
    int k = 0;
    std::vector<GradedVector> classes;

    static ChernData zero(const DgaModelPtr& base, int k);
};

/* Model of the fiberwise projectivization: the base algebra with one
 * even generator xi of degree 2 adjoined, dxi = 0, subject to
 * xi^{k+1} = -sum c_i xi^{k+1-i}. As a module over the base it is free
 * on 1, xi, ..., xi^k, so H(E) splits degreewise. */
class ProjectivizationModel {
  public:
    ProjectivizationModel(DgaModelPtr base, DgaModelPtr total, size_t xi_index, int k,
                          ChernData chern);

    const DgaModelPtr& base() const { return base_; }
    const DgaModelPtr& total() const { return total_; }
    int fiber_dimension() const { return k_; }
    const ChernData& chern() const { return chern_; }
    const DgaMorphism& pullback() const { return pullback_; }

    GradedVector xi() const;
    CohomologyClass pull(const CohomologyClass& base_class) const;
    /* Class of xi^power * p*(base_class). */
    CohomologyClass xi_times(int power, const CohomologyClass& base_class) const;

    /* Base components a_0..a_k with a = sum xi^i p*(a_i), unique. */
    std::vector<CohomologyClass> decompose(const CohomologyClass& a) const;
    CohomologyClass reassemble(const std::vector<CohomologyClass>& components) const;

    struct DimensionCheck {
        int degree;
        int total_dim;
        int base_sum;
        bool ok;
    };
    std::vector<DimensionCheck> leray_hirsch_report() const;

  private:
    DgaModelPtr base_;
    DgaModelPtr total_;
    size_t xi_index_;
    int k_;
    ChernData chern_;
    DgaMorphism pullback_;
};

/* Builds the projectivization model; throws not_a_cocycle on bad Chern
 * data. Truncation of the total model is base truncation + 2k. */
ProjectivizationModel projectivize(const DgaModelPtr& base, const ChernData& chern);

struct LiftIdealOutcome {
    bool upstairs = false;
    bool downstairs = false;
};

/* Tests xi^n p*(x) against the ideal (p*a_1, ..., p*a_m) upstairs and x
 * against (a_1, ..., a_m) downstairs; "upstairs true, downstairs false"
 * is impossible and raises an engine error. */
LiftIdealOutcome lift_ideal_check(const ProjectivizationModel& E, const CohomologyClass& x,
                                  const std::vector<CohomologyClass>& gens, int n);

/* <xi^l p*a, xi^m p*b, xi^n p*c> for an essential base triple <a,b,c>;
 * essential whenever l+m+n <= k, and the computed verdict is checked
 * against that guarantee. */
MasseyVerdict transferred_massey(const ProjectivizationModel& E, const CohomologyClass& a,
                                 const CohomologyClass& b, const CohomologyClass& c,
                                 int l, int m, int n);

}  // namespace massey

#endif
