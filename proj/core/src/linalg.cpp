#include "massey/linalg.hpp"

#include <algorithm>

namespace massey {

bool row_is_zero(const Row& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

/* Scale a rational row to coprime integers. No-op over F_p. */
void make_primitive(Row& row, const Field& field) {
    if (!field.is_rational()) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& s : row) {
        if (s.is_zero()) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), s.rational_value().get_den().get_mpz_t());
    }
    if (den_lcm != 1) {
        Scalar f = Scalar::rational(mpq_class(den_lcm));
        for (auto& s : row) s *= f;
    }
    for (const auto& s : row) {
        if (s.is_zero()) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), s.rational_value().get_num().get_mpz_t());
    }
    if (num_gcd > 1) {
        Scalar f = Scalar::rational(mpq_class(mpz_class(1), num_gcd));
        for (auto& s : row) s *= f;
    }
}

/* target -= c * source */
void axpy(Row& target, const Scalar& c, const Row& source) {
    for (size_t i = 0; i < target.size(); ++i) {
        if (!source[i].is_zero()) target[i] -= c * source[i];
    }
}

/* target := a*target - b*source (fraction-free elimination step) */
void cross(Row& target, const Scalar& a, const Scalar& b, const Row& source) {
    for (size_t i = 0; i < target.size(); ++i) {
        target[i] = a * target[i] - b * source[i];
    }
}

}  // namespace

Echelon rref(std::vector<Row> rows, const Field& field, size_t cols) {
    for (auto& r : rows) {
        if (r.size() != cols) throw engine_error("ragged matrix");
        make_primitive(r, field);
    }
    size_t next = 0;
    std::vector<size_t> pivots;
    for (size_t col = 0; col < cols && next < rows.size(); ++col) {
        size_t sel = rows.size();
        for (size_t i = next; i < rows.size(); ++i) {
            if (!rows[i][col].is_zero()) { sel = i; break; }
        }
        if (sel == rows.size()) continue;
        std::swap(rows[next], rows[sel]);
        for (size_t i = next + 1; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            if (field.is_rational()) {
                cross(rows[i], rows[next][col], rows[i][col], rows[next]);
                make_primitive(rows[i], field);
            } else {
                axpy(rows[i], rows[i][col] / rows[next][col], rows[next]);
            }
        }
        pivots.push_back(col);
        ++next;
    }
    rows.resize(pivots.size());
    // Clear above the pivots, then normalize pivots to 1.
    for (size_t k = pivots.size(); k-- > 0;) {
        for (size_t j = 0; j < k; ++j) {
            if (rows[j][pivots[k]].is_zero()) continue;
            if (field.is_rational()) {
                cross(rows[j], rows[k][pivots[k]], rows[j][pivots[k]], rows[k]);
                make_primitive(rows[j], field);
            } else {
                axpy(rows[j], rows[j][pivots[k]] / rows[k][pivots[k]], rows[k]);
            }
        }
    }
    for (size_t k = 0; k < pivots.size(); ++k) {
        Scalar inv = rows[k][pivots[k]].inverse();
        for (auto& s : rows[k]) s *= inv;
    }
    Echelon e;
    e.rows = std::move(rows);
    e.pivots = std::move(pivots);
    e.cols = cols;
    e.field = field;
    return e;
}

Row Echelon::reduce(const Row& v, std::vector<Scalar>* coeffs) const {
    Row out = v;
    if (coeffs) coeffs->assign(rows.size(), Scalar::zero(field));
    for (size_t k = 0; k < rows.size(); ++k) {
        const Scalar& c = out[pivots[k]];
        if (c.is_zero()) continue;
        Scalar f = c;  // pivot is 1
        if (coeffs) (*coeffs)[k] = f;
        axpy(out, f, rows[k]);
    }
    return out;
}

bool Echelon::contains(const Row& v) const {
    return row_is_zero(reduce(v));
}

std::optional<std::vector<Scalar>> solve_combination(const std::vector<Row>& rows,
                                                     const Row& target,
                                                     const Field& field) {
    size_t m = rows.size();
    size_t n = target.size();
    std::vector<Row> aug(n, Row(m + 1, Scalar::zero(field)));
    for (size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw engine_error("ragged matrix");
        for (size_t x = 0; x < n; ++x) aug[x][i] = rows[i][x];
    }
    for (size_t x = 0; x < n; ++x) aug[x][m] = target[x];
    Echelon e = rref(std::move(aug), field, m + 1);
    std::vector<Scalar> sol(m, Scalar::zero(field));
    for (size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] == m) return std::nullopt;  // inconsistent
        sol[e.pivots[k]] = e.rows[k][m];
    }
    return sol;
}

Echelon kernel_basis(const std::vector<Row>& rows, const Field& field, size_t cols) {
    size_t m = rows.size();
    std::vector<Row> mat;
    if (m > 0) {
        mat.assign(cols, Row(m, Scalar::zero(field)));
        for (size_t i = 0; i < m; ++i)
            for (size_t x = 0; x < cols; ++x) mat[x][i] = rows[i][x];
    }
    Echelon e = rref(std::move(mat), field, m);
    std::vector<bool> is_pivot(m, false);
    for (size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Row> basis;
    for (size_t f = 0; f < m; ++f) {
        if (is_pivot[f]) continue;
        Row v(m, Scalar::zero(field));
        v[f] = Scalar::one(field);
        for (size_t k = 0; k < e.pivots.size(); ++k) {
            if (!e.rows[k][f].is_zero()) v[e.pivots[k]] = -e.rows[k][f];
        }
        basis.push_back(std::move(v));
    }
    return rref(std::move(basis), field, m);
}

}  // namespace massey
