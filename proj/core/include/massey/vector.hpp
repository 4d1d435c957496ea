#ifndef MASSEY_VECTOR_HPP
#define MASSEY_VECTOR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "massey/presentation.hpp"

namespace massey {

/* Homogeneous element of the algebra: a degree and a sparse, canonically
 * ordered list of (monomial, nonzero scalar) terms. Zero keeps its degree. */
class GradedVector {
  public:
    GradedVector() = default;
    GradedVector(PresentationPtr pres, int degree)
        : pres_(std::move(pres)), degree_(degree) {}

    static GradedVector zero(PresentationPtr pres, int degree) {
        return GradedVector(std::move(pres), degree);
    }
    static GradedVector unit(PresentationPtr pres);  // the element 1
    static GradedVector generator(PresentationPtr pres, size_t index);
    static GradedVector term(PresentationPtr pres, const Monomial& m, const Scalar& c);
    static GradedVector from_terms(PresentationPtr pres, int degree,
                                   std::vector<std::pair<Monomial, Scalar>> terms);

    const PresentationPtr& presentation() const { return pres_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<Monomial, Scalar>>& terms() const { return terms_; }

    GradedVector operator-() const;
    GradedVector operator+(const GradedVector& o) const;
    GradedVector operator-(const GradedVector& o) const;
    GradedVector operator*(const GradedVector& o) const;  // Koszul product
    GradedVector scaled(const Scalar& c) const;

    /* a |-> (-1)^|a| a */
    GradedVector bar() const;

    bool operator==(const GradedVector& o) const;
    bool operator!=(const GradedVector& o) const { return !(*this == o); }

    /* Dense coordinates over basis_of_degree(degree()). */
    std::vector<Scalar> coords() const;
    static GradedVector from_coords(const PresentationPtr& pres, int degree,
                                    const std::vector<Scalar>& coords);

    /* "x1*x4 + x2*x3", "-3/7*x1", "0". Deterministic. */
    std::string to_string() const;

  private:
    friend class DgaModel;
    void add_term(const Monomial& m, const Scalar& c,
                  std::map<Monomial, Scalar, MonomialLess>& acc) const;
    static GradedVector collect(PresentationPtr pres, int degree,
                                std::map<Monomial, Scalar, MonomialLess>&& acc);

    PresentationPtr pres_;
    int degree_ = 0;
    std::vector<std::pair<Monomial, Scalar>> terms_;
};

}  // namespace massey

#endif
