#ifndef MASSEY_DGA_HPP
#define MASSEY_DGA_HPP

#include <memory>
#include <mutex>
#include <optional>

#include "massey/linalg.hpp"
#include "massey/vector.hpp"

namespace massey {

/* Cohomology class carried by its canonical representative: any cocycle
 * representative reduced against the echelon basis of coboundaries.
 * Two classes are equal iff their representatives are identical. */
class CohomologyClass {
  public:
    CohomologyClass() = default;
    explicit CohomologyClass(GradedVector rep) : rep_(std::move(rep)) {}

    const GradedVector& rep() const { return rep_; }
    int degree() const { return rep_.degree(); }
    bool is_zero() const { return rep_.is_zero(); }

    bool operator==(const CohomologyClass& o) const { return rep_ == o.rep_; }
    bool operator!=(const CohomologyClass& o) const { return !(*this == o); }

  private:
    GradedVector rep_;
};

/* Echelon basis of a subspace of one cohomology degree; rows are canonical
 * representatives with strictly increasing pivots. */
struct SubspaceBasis {
    int degree = 0;
    std::vector<GradedVector> rows;
    Echelon echelon;

    size_t dim() const { return rows.size(); }
};

struct Membership {
    bool member = false;
    std::vector<Scalar> coefficients;  // over the SubspaceBasis rows, when member
    GradedVector residue;              // nonzero when not a member
};

/* A finite-dimensional graded-commutative DGA: a truncated presentation
 * plus the differential on generators, extended by the Leibniz rule.
 * Immutable; per-degree echelon data is cached on first use. */
class DgaModel {
  public:
    DgaModel(PresentationPtr pres, std::vector<GradedVector> generator_differentials);

    const PresentationPtr& presentation() const { return pres_; }
    Field field() const { return pres_->field(); }
    int truncation() const { return pres_->truncation(); }
    const GradedVector& differential_of_generator(size_t i) const { return diff_[i]; }

    GradedVector d(const GradedVector& v) const;

    struct D2Violation {
        Monomial monomial;
        int degree;
        GradedVector d_squared;
    };
    /* Every basis monomial with d(d(m)) != 0, across the whole truncated
     * basis. Empty report = valid model. */
    std::vector<D2Violation> validate() const;

    int chain_dim(int n) const;
    const Echelon& coboundary_echelon(int n) const;
    const Echelon& cocycle_echelon(int n) const;
    std::vector<GradedVector> coboundary_basis(int n) const;
    std::vector<GradedVector> cocycle_basis(int n) const;
    std::vector<CohomologyClass> cohomology_basis(int n) const;
    int betti(int n) const;

    bool is_cocycle(const GradedVector& v) const;
    CohomologyClass reduce_to_class(const GradedVector& cocycle) const;
    CohomologyClass zero_class(int degree) const;

    struct Primitive {
        GradedVector x;
        size_t solution_space_dim;  // dim of the cocycle space in x's degree
    };
    struct SolveOutcome {
        std::optional<Primitive> primitive;
        GradedVector obstruction;  // residue mod coboundaries when unsolvable
        bool obstruction_is_cocycle = false;
    };
    SolveOutcome try_solve_primitive(const GradedVector& c) const;
    /* Canonical primitive (free coordinates zero); throws not_a_boundary. */
    Primitive solve_primitive(const GradedVector& c) const;

    CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) const;

    /* Degree-n slice of the ideal generated by gens in H(A). */
    SubspaceBasis ideal_slice(const std::vector<CohomologyClass>& gens, int n) const;

    Membership member(const CohomologyClass& v, const SubspaceBasis& s) const;

    /* Echelonized span of already-reduced representatives. */
    SubspaceBasis span_of(const std::vector<GradedVector>& reduced_reps, int degree) const;

  private:
    struct DegreeData {
        bool have_rows = false;
        std::vector<Row> d_rows;  // row i = d(basis[i]) in degree-(n+1) coordinates
        std::optional<Echelon> boundaries;
        std::optional<Echelon> cocycles;
        std::optional<std::vector<GradedVector>> h_reps;
    };

    const std::vector<Row>& d_rows(int n) const;
    GradedVector d_monomial(const Monomial& m) const;

    PresentationPtr pres_;
    std::vector<GradedVector> diff_;

    mutable std::mutex mutex_;
    mutable std::map<int, DegreeData> degree_data_;
    mutable std::map<Monomial, GradedVector, MonomialLess> d_cache_;
};

using DgaModelPtr = std::shared_ptr<const DgaModel>;

}  // namespace massey

#endif
