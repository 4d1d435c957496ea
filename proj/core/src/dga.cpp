#include "massey/dga.hpp"

#include <algorithm>

namespace massey {

DgaModel::DgaModel(PresentationPtr pres, std::vector<GradedVector> generator_differentials)
    : pres_(std::move(pres)), diff_(std::move(generator_differentials)) {
    if (diff_.size() != pres_->generator_count())
        throw engine_error("differential must be given on every generator");
    for (size_t i = 0; i < diff_.size(); ++i) {
        const auto& g = pres_->generator(i);
        if (diff_[i].is_zero()) {
            diff_[i] = GradedVector::zero(pres_, g.degree + 1);
            continue;
        }
        Presentation::require_same(pres_, diff_[i].presentation());
        if (diff_[i].degree() != g.degree + 1)
            throw invalid_differential("d(" + g.name + ") must raise degree by exactly 1");
    }
}

GradedVector DgaModel::d_monomial(const Monomial& m) const {
    size_t n = pres_->generator_count();
    int deg = pres_->degree_of(m);
    GradedVector out = GradedVector::zero(pres_, deg + 1);
    int prefix_parity = 0;
    for (size_t i = 0; i < n; ++i) {
        int e = m.exps[i];
        if (e == 0) continue;
        int gdeg = pres_->generator(i).degree;
        if (!diff_[i].is_zero()) {
            Monomial prefix = Monomial::one(n), rest = Monomial::one(n);
            for (size_t j = 0; j < i; ++j) prefix.exps[j] = m.exps[j];
            rest.exps[i] = uint16_t(e - 1);
            for (size_t j = i + 1; j < n; ++j) rest.exps[j] = m.exps[j];
            Scalar coeff = Scalar::of_int(pres_->field(), (prefix_parity % 2) ? -e : e);
            GradedVector term =
                GradedVector::term(pres_, prefix, Scalar::one(pres_->field())) * diff_[i];
            term = term * GradedVector::term(pres_, rest, Scalar::one(pres_->field()));
            out = out + term.scaled(coeff);
        }
        prefix_parity += e * gdeg;
    }
    return out;
}

GradedVector DgaModel::d(const GradedVector& v) const {
    Presentation::require_same(pres_, v.presentation());
    GradedVector out = GradedVector::zero(pres_, v.degree() + 1);
    for (const auto& [m, c] : v.terms()) {
        GradedVector dm;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = d_cache_.find(m);
            if (it != d_cache_.end()) dm = it->second;
        }
        if (dm.presentation() == nullptr) {
            dm = d_monomial(m);
            std::lock_guard<std::mutex> lock(mutex_);
            d_cache_.emplace(m, dm);
        }
        out = out + dm.scaled(c);
    }
    return out;
}

std::vector<DgaModel::D2Violation> DgaModel::validate() const {
    std::vector<D2Violation> issues;
    for (int n = 0; n <= truncation(); ++n) {
        for (const auto& m : pres_->basis_of_degree(n)) {
            GradedVector dd = d(d(GradedVector::term(pres_, m, Scalar::one(field()))));
            if (!dd.is_zero()) issues.push_back({m, n, dd});
        }
    }
    return issues;
}

int DgaModel::chain_dim(int n) const {
    if (n < 0 || n > truncation()) return 0;
    return int(pres_->basis_of_degree(n).size());
}

const std::vector<Row>& DgaModel::d_rows(int n) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto& dd = degree_data_[n];
        if (dd.have_rows) return dd.d_rows;
    }
    std::vector<Row> rows;
    if (n >= 0 && n <= truncation()) {
        const auto& basis = pres_->basis_of_degree(n);
        size_t target = (n + 1 <= truncation()) ? pres_->basis_of_degree(n + 1).size() : 0;
        rows.reserve(basis.size());
        for (const auto& m : basis) {
            GradedVector dm = d(GradedVector::term(pres_, m, Scalar::one(field())));
            if (target == 0) {
                rows.emplace_back();
            } else {
                rows.push_back(dm.coords());
            }
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto& dd = degree_data_[n];
    if (!dd.have_rows) {
        dd.d_rows = std::move(rows);
        dd.have_rows = true;
    }
    return dd.d_rows;
}

const Echelon& DgaModel::coboundary_echelon(int n) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto& dd = degree_data_[n];
        if (dd.boundaries) return *dd.boundaries;
    }
    size_t cols = size_t(chain_dim(n));
    std::vector<Row> rows;
    if (n >= 1 && n <= truncation()) {
        for (const auto& r : d_rows(n - 1)) {
            if (!r.empty() && !row_is_zero(r)) rows.push_back(r);
        }
    }
    Echelon e = rref(std::move(rows), field(), cols);
    std::lock_guard<std::mutex> lock(mutex_);
    auto& dd = degree_data_[n];
    if (!dd.boundaries) dd.boundaries = std::move(e);
    return *dd.boundaries;
}

const Echelon& DgaModel::cocycle_echelon(int n) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto& dd = degree_data_[n];
        if (dd.cocycles) return *dd.cocycles;
    }
    size_t target = (n + 1 <= truncation() && n >= 0) ? size_t(chain_dim(n + 1)) : 0;
    Echelon e = kernel_basis(d_rows(n), field(), target);
    std::lock_guard<std::mutex> lock(mutex_);
    auto& dd = degree_data_[n];
    if (!dd.cocycles) dd.cocycles = std::move(e);
    return *dd.cocycles;
}

std::vector<GradedVector> DgaModel::coboundary_basis(int n) const {
    std::vector<GradedVector> out;
    for (const auto& r : coboundary_echelon(n).rows)
        out.push_back(GradedVector::from_coords(pres_, n, r));
    return out;
}

std::vector<GradedVector> DgaModel::cocycle_basis(int n) const {
    std::vector<GradedVector> out;
    for (const auto& r : cocycle_echelon(n).rows)
        out.push_back(GradedVector::from_coords(pres_, n, r));
    return out;
}

std::vector<CohomologyClass> DgaModel::cohomology_basis(int n) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto& dd = degree_data_[n];
        if (dd.h_reps) {
            std::vector<CohomologyClass> out;
            for (const auto& v : *dd.h_reps) out.emplace_back(v);
            return out;
        }
    }
    const Echelon& z = cocycle_echelon(n);
    const Echelon& b = coboundary_echelon(n);
    std::vector<Row> reduced;
    for (const auto& r : z.rows) {
        Row res = b.reduce(r);
        if (!row_is_zero(res)) reduced.push_back(std::move(res));
    }
    Echelon h = rref(std::move(reduced), field(), size_t(chain_dim(n)));
    std::vector<GradedVector> reps;
    for (const auto& r : h.rows) reps.push_back(GradedVector::from_coords(pres_, n, r));
    std::lock_guard<std::mutex> lock(mutex_);
    auto& dd = degree_data_[n];
    if (!dd.h_reps) dd.h_reps = std::move(reps);
    std::vector<CohomologyClass> out;
    for (const auto& v : *dd.h_reps) out.emplace_back(v);
    return out;
}

int DgaModel::betti(int n) const {
    if (n < 0 || n > truncation()) return 0;
    return int(cohomology_basis(n).size());
}

bool DgaModel::is_cocycle(const GradedVector& v) const {
    return d(v).is_zero();
}

CohomologyClass DgaModel::reduce_to_class(const GradedVector& cocycle) const {
    Presentation::require_same(pres_, cocycle.presentation());
    if (!is_cocycle(cocycle))
        throw not_a_cocycle("representative is not a cocycle: " + cocycle.to_string());
    int n = cocycle.degree();
    if (cocycle.is_zero()) return CohomologyClass(GradedVector::zero(pres_, n));
    Row residue = coboundary_echelon(n).reduce(cocycle.coords());
    return CohomologyClass(GradedVector::from_coords(pres_, n, residue));
}

CohomologyClass DgaModel::zero_class(int degree) const {
    return CohomologyClass(GradedVector::zero(pres_, degree));
}

DgaModel::SolveOutcome DgaModel::try_solve_primitive(const GradedVector& c) const {
    Presentation::require_same(pres_, c.presentation());
    int target_deg = c.degree();
    int n = target_deg - 1;
    if (c.is_zero()) {
        size_t dim = (n >= 0 && n <= truncation()) ? cocycle_echelon(n).rank() : 0;
        return {Primitive{GradedVector::zero(pres_, std::max(n, 0)), dim},
                GradedVector::zero(pres_, target_deg), true};
    }
    if (n < 0 || n > truncation() || target_deg > truncation()) {
        return {std::nullopt, c, is_cocycle(c)};
    }
    auto coeffs = solve_combination(d_rows(n), c.coords(), field());
    if (!coeffs) {
        Row residue = coboundary_echelon(target_deg).reduce(c.coords());
        return {std::nullopt, GradedVector::from_coords(pres_, target_deg, residue),
                is_cocycle(c)};
    }
    GradedVector x = GradedVector::from_coords(pres_, n, *coeffs);
    return {Primitive{std::move(x), cocycle_echelon(n).rank()},
            GradedVector::zero(pres_, target_deg), true};
}

DgaModel::Primitive DgaModel::solve_primitive(const GradedVector& c) const {
    SolveOutcome out = try_solve_primitive(c);
    if (!out.primitive) {
        std::string what = "no primitive exists for " + c.to_string();
        throw not_a_boundary(what, out.obstruction.to_string());
    }
    return std::move(*out.primitive);
}

CohomologyClass DgaModel::cup(const CohomologyClass& a, const CohomologyClass& b) const {
    return reduce_to_class(a.rep() * b.rep());
}

SubspaceBasis DgaModel::span_of(const std::vector<GradedVector>& reduced_reps, int degree) const {
    std::vector<Row> rows;
    for (const auto& v : reduced_reps) {
        if (v.is_zero()) continue;
        if (v.degree() != degree) throw degree_mismatch("span_of: degree mismatch");
        rows.push_back(v.coords());
    }
    Echelon e = rref(std::move(rows), field(), size_t(chain_dim(degree)));
    SubspaceBasis s;
    s.degree = degree;
    for (const auto& r : e.rows) s.rows.push_back(GradedVector::from_coords(pres_, degree, r));
    s.echelon = std::move(e);
    return s;
}

SubspaceBasis DgaModel::ideal_slice(const std::vector<CohomologyClass>& gens, int n) const {
    if (n < 0 || n > truncation())
        throw degree_out_of_range("ideal slice degree outside the truncated range");
    std::vector<GradedVector> products;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int gd = g.degree();
        if (gd > n) continue;
        for (const auto& h : cohomology_basis(n - gd)) {
            CohomologyClass prod = cup(g, h);
            if (!prod.is_zero()) products.push_back(prod.rep());
        }
    }
    return span_of(products, n);
}

Membership DgaModel::member(const CohomologyClass& v, const SubspaceBasis& s) const {
    if (v.degree() != s.degree && !v.is_zero())
        throw degree_mismatch("membership test across different degrees");
    Membership out;
    if (v.is_zero()) {
        out.member = true;
        out.coefficients.assign(s.rows.size(), Scalar::zero(field()));
        out.residue = GradedVector::zero(pres_, s.degree);
        return out;
    }
    std::vector<Scalar> coeffs;
    Row residue = s.echelon.reduce(v.rep().coords(), &coeffs);
    out.member = row_is_zero(residue);
    out.coefficients = std::move(coeffs);
    out.residue = GradedVector::from_coords(pres_, v.degree(), residue);
    return out;
}

}  // namespace massey
