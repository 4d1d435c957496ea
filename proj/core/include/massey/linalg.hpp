#ifndef MASSEY_LINALG_HPP
#define MASSEY_LINALG_HPP

#include <optional>
#include <vector>

#include "massey/field.hpp"

namespace massey {

using Row = std::vector<Scalar>;

/* Reduced row echelon basis of a subspace: pivot entries are 1, pivot
 * columns strictly increase and are zero in every other row. */
struct Echelon {
    std::vector<Row> rows;
    std::vector<size_t> pivots;
    size_t cols = 0;
    Field field = Field::rationals();

    size_t rank() const { return rows.size(); }

    /* Eliminate the pivot coordinates of v; returns the residue. When
     * coeffs is non-null it receives the combination that was subtracted,
     * so v == residue + sum coeffs[i]*rows[i]. */
    Row reduce(const Row& v, std::vector<Scalar>* coeffs = nullptr) const;

    bool contains(const Row& v) const;
};

/* Fraction-free-then-normalized Gaussian elimination over Q (rows are
 * rescaled to coprime integers and eliminated by cross-multiplication
 * before the final pivot normalization); plain elimination over F_p. */
Echelon rref(std::vector<Row> rows, const Field& field, size_t cols);

/* Canonical solution c (free coordinates zero) of sum_i c_i rows[i] = target,
 * or nullopt when target is outside the span. */
std::optional<std::vector<Scalar>> solve_combination(const std::vector<Row>& rows,
                                                     const Row& target,
                                                     const Field& field);

/* Echelon basis of { c : sum_i c_i rows[i] = 0 }. */
Echelon kernel_basis(const std::vector<Row>& rows, const Field& field, size_t cols);

bool row_is_zero(const Row& v);

}  // namespace massey

#endif
