#ifndef MASSEY_LIE_HPP
#define MASSEY_LIE_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "massey/dga.hpp"

namespace massey {

/* Finite-dimensional Lie algebra by structure constants:
 * [e_i, e_j] = sum_k c(i,j,k) e_k, stored for i < j and extended
 * antisymmetrically. */
struct LieAlgebraData {
    Field field = Field::rationals();
    size_t dimension = 0;
    std::map<std::pair<size_t, size_t>, std::vector<Scalar>> brackets;  // i < j

    void set_bracket(size_t i, size_t j, std::vector<Scalar> coeffs);
    /* [e_i, e_j] with the antisymmetry filled in; zero-based indices. */
    std::vector<Scalar> bracket(size_t i, size_t j) const;

    /* First violated triple, or nullopt when the Jacobi identity holds. */
    std::optional<std::array<int, 3>> jacobi_witness() const;
    bool is_nilpotent() const;  // lower central series reaches zero
};

/* Exterior algebra on the dual basis with d(x^k) = -sum_{i<j} c^k_ij x^i x^j,
 * truncated at the top degree (= dimension). Rejects Jacobi violations
 * (jacobi_failure, with a witness triple) and non-nilpotent algebras. */
DgaModelPtr chevalley_eilenberg(const LieAlgebraData& L,
                                const std::vector<std::string>& names = {});

/* Free graded-commutative model: validates that the differential raises
 * degree by one and squares to zero (invalid_differential names the
 * offending generator). */
DgaModelPtr free_cdga(PresentationPtr pres, std::vector<GradedVector> generator_differentials);

}  // namespace massey

#endif
