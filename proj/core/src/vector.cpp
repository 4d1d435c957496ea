#include "massey/vector.hpp"

#include <algorithm>

namespace massey {

GradedVector GradedVector::unit(PresentationPtr pres) {
    auto n = pres->generator_count();
    GradedVector v(std::move(pres), 0);
    v.terms_.emplace_back(Monomial::one(n), Scalar::one(v.pres_->field()));
    return v;
}

GradedVector GradedVector::generator(PresentationPtr pres, size_t index) {
    Monomial m = Monomial::one(pres->generator_count());
    m.exps[index] = 1;
    int d = pres->generator(index).degree;
    GradedVector v(std::move(pres), d);
    v.terms_.emplace_back(std::move(m), Scalar::one(v.pres_->field()));
    return v;
}

GradedVector GradedVector::term(PresentationPtr pres, const Monomial& m, const Scalar& c) {
    int d = pres->degree_of(m);
    GradedVector v(std::move(pres), d);
    if (!c.is_zero()) v.terms_.emplace_back(m, c);
    return v;
}

GradedVector GradedVector::from_terms(PresentationPtr pres, int degree,
                                      std::vector<std::pair<Monomial, Scalar>> terms) {
    std::map<Monomial, Scalar, MonomialLess> acc;
    GradedVector probe(pres, degree);
    for (auto& [m, c] : terms) {
        if (pres->degree_of(m) != degree)
            throw degree_mismatch("term degree differs from vector degree");
        probe.add_term(m, c, acc);
    }
    return collect(std::move(pres), degree, std::move(acc));
}

/* Accumulate c*m, rewriting capped powers down until canonical. */
void GradedVector::add_term(const Monomial& m, const Scalar& c,
                            std::map<Monomial, Scalar, MonomialLess>& acc) const {
    if (c.is_zero()) return;
    for (size_t i = 0; i < pres_->generator_count(); ++i) {
        const auto* cap = pres_->capped_power(i);
        if (!cap || int(m.exps[i]) < cap->cap) continue;
        Monomial rest = m;
        rest.exps[i] = uint16_t(rest.exps[i] - cap->cap);
        for (const auto& [rm, rc] : cap->rewrite) {
            auto [sign, prod] = pres_->normalize_product(rm, rest);
            if (!prod) continue;
            Scalar coeff = c * rc;
            if (sign < 0) coeff = -coeff;
            add_term(*prod, coeff, acc);
        }
        return;
    }
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

GradedVector GradedVector::collect(PresentationPtr pres, int degree,
                                   std::map<Monomial, Scalar, MonomialLess>&& acc) {
    GradedVector v(std::move(pres), degree);
    v.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) v.terms_.emplace_back(m, c);
    return v;
}

GradedVector GradedVector::operator-() const {
    GradedVector v(pres_, degree_);
    v.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) v.terms_.emplace_back(m, -c);
    return v;
}

GradedVector GradedVector::operator+(const GradedVector& o) const {
    Presentation::require_same(pres_, o.pres_);
    if (terms_.empty()) return o;
    if (o.terms_.empty()) return *this;
    if (degree_ != o.degree_)
        throw degree_mismatch("adding vectors of different degrees");
    std::map<Monomial, Scalar, MonomialLess> acc;
    for (const auto& [m, c] : terms_) add_term(m, c, acc);
    for (const auto& [m, c] : o.terms_) add_term(m, c, acc);
    return collect(pres_, degree_, std::move(acc));
}

GradedVector GradedVector::operator-(const GradedVector& o) const {
    return *this + (-o);
}

GradedVector GradedVector::scaled(const Scalar& c) const {
    if (c.is_zero()) return GradedVector(pres_, degree_);
    GradedVector v(pres_, degree_);
    v.terms_.reserve(terms_.size());
    for (const auto& [m, s] : terms_) v.terms_.emplace_back(m, s * c);
    return v;
}

GradedVector GradedVector::operator*(const GradedVector& o) const {
    Presentation::require_same(pres_, o.pres_);
    int degree = degree_ + o.degree_;
    std::map<Monomial, Scalar, MonomialLess> acc;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            auto [sign, prod] = pres_->normalize_product(m1, m2);
            if (!prod) continue;
            Scalar c = c1 * c2;
            if (sign < 0) c = -c;
            add_term(*prod, c, acc);
        }
    }
    return collect(pres_, degree, std::move(acc));
}

GradedVector GradedVector::bar() const {
    return (degree_ % 2 != 0) ? -*this : *this;
}

bool GradedVector::operator==(const GradedVector& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    if (terms_.size() != o.terms_.size() || degree_ != o.degree_) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second)
            return false;
    }
    return true;
}

std::vector<Scalar> GradedVector::coords() const {
    const auto& basis = pres_->basis_of_degree(degree_);
    std::vector<Scalar> out(basis.size(), Scalar::zero(pres_->field()));
    for (const auto& [m, c] : terms_) out[pres_->monomial_index(degree_, m)] = c;
    return out;
}

GradedVector GradedVector::from_coords(const PresentationPtr& pres, int degree,
                                       const std::vector<Scalar>& coords) {
    const auto& basis = pres->basis_of_degree(degree);
    if (coords.size() != basis.size())
        throw degree_mismatch("coordinate vector has the wrong length");
    GradedVector v(pres, degree);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (!coords[i].is_zero()) v.terms_.emplace_back(basis[i], coords[i]);
    }
    return v;
}

std::string GradedVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar a = c;
        bool neg = false;
        if (pres_->field().is_rational() && a.rational_value() < 0) {
            neg = true;
            a = -a;
        }
        // Inside polynomials the field is fixed, so residues print as digits.
        std::string cs = pres_->field().is_rational() ? a.rational_value().get_str()
                                                      : std::to_string(a.residue_value());
        if (first) {
            out += neg ? "-" : "";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string ms = pres_->render(m);
        if (ms == "1") {
            out += cs;
        } else if (a.is_one()) {
            out += ms;
        } else {
            out += cs + "*" + ms;
        }
    }
    return out;
}

}  // namespace massey
