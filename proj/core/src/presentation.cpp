#include "massey/presentation.hpp"

#include <algorithm>

namespace massey {

Presentation::Presentation(Field field, std::vector<GeneratorDecl> generators, int truncation)
    : field_(field), gens_(std::move(generators)), truncation_(truncation) {
    if (truncation_ < 0)
        throw engine_error("truncation degree must be non-negative");
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree <= 0)
            throw engine_error("generator '" + gens_[i].name + "' must have positive degree");
        if (!index_.emplace(gens_[i].name, i).second)
            throw engine_error("duplicate generator name '" + gens_[i].name + "'");
    }
}

std::optional<size_t> Presentation::generator_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const Presentation::CappedPower* Presentation::capped_power(size_t i) const {
    auto it = caps_.find(i);
    return it == caps_.end() ? nullptr : &it->second;
}

int Presentation::degree_of(const Monomial& m) const {
    int d = 0;
    for (size_t i = 0; i < m.exps.size() && i < gens_.size(); ++i)
        d += int(m.exps[i]) * gens_[i].degree;
    return d;
}

bool Presentation::is_canonical(const Monomial& m) const {
    if (m.exps.size() != gens_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree % 2 != 0 && m.exps[i] > 1) return false;
        if (auto* cap = capped_power(i); cap && int(m.exps[i]) >= cap->cap) return false;
    }
    return degree_of(m) <= truncation_;
}

std::pair<int, std::optional<Monomial>> Presentation::normalize_product(const Monomial& a,
                                                                        const Monomial& b) const {
    size_t n = gens_.size();
    // Crossing parity: each odd letter of b passes every odd letter of a
    // with a strictly larger generator index.
    int parity = 0;
    std::vector<int> suffix(n + 1, 0);  // odd letters of a with index > j
    for (size_t i = n; i-- > 0;) {
        suffix[i] = suffix[i + 1] + ((gens_[i].degree % 2) ? int(a.exps[i]) : 0);
    }
    int degree = 0;
    Monomial r = Monomial::one(n);
    for (size_t j = 0; j < n; ++j) {
        int e = int(a.exps[j]) + int(b.exps[j]);
        if (gens_[j].degree % 2 != 0) {
            if (e > 1) return {1, std::nullopt};
            if (b.exps[j]) parity += suffix[j + 1];
        }
        r.exps[j] = uint16_t(e);
        degree += e * gens_[j].degree;
    }
    if (degree > truncation_) return {1, std::nullopt};
    return {(parity % 2) ? -1 : 1, r};
}

const std::vector<Monomial>& Presentation::basis_of_degree(int n) const {
    if (n < 0 || n > truncation_)
        throw degree_out_of_range("degree " + std::to_string(n) + " outside [0, " +
                                  std::to_string(truncation_) + "]");
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = basis_cache_.find(n);
    if (it != basis_cache_.end()) return it->second;

    std::vector<Monomial> out;
    Monomial cur = Monomial::one(gens_.size());
    // Exponents chosen largest-first per generator; that emits canonical order.
    auto rec = [&](auto&& self, size_t i, int remaining) -> void {
        if (remaining == 0) {
            Monomial m = cur;
            for (size_t j = i; j < gens_.size(); ++j) m.exps[j] = 0;
            out.push_back(std::move(m));
            return;
        }
        if (i >= gens_.size()) return;
        int d = gens_[i].degree;
        int emax = remaining / d;
        if (d % 2 != 0) emax = std::min(emax, 1);
        if (auto* cap = capped_power(i)) emax = std::min(emax, cap->cap - 1);
        for (int e = emax; e >= 0; --e) {
            cur.exps[i] = uint16_t(e);
            self(self, i + 1, remaining - e * d);
        }
        cur.exps[i] = 0;
    };
    rec(rec, 0, n);
    return basis_cache_.emplace(n, std::move(out)).first->second;
}

size_t Presentation::monomial_index(int n, const Monomial& m) const {
    basis_of_degree(n);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto& idx = index_cache_[n];
    if (idx.empty()) {
        const auto& basis = basis_cache_.at(n);
        for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
    }
    auto it = idx.find(m);
    if (it == idx.end())
        throw engine_error("monomial is not canonical in degree " + std::to_string(n));
    return it->second;
}

std::string Presentation::render(const Monomial& m) const {
    std::string out;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (!m.exps[i]) continue;
        if (!out.empty()) out += "*";
        out += gens_[i].name;
        if (m.exps[i] > 1) out += "^" + std::to_string(int(m.exps[i]));
    }
    return out.empty() ? "1" : out;
}

bool Presentation::operator==(const Presentation& o) const {
    if (field_ != o.field_ || truncation_ != o.truncation_ || gens_ != o.gens_) return false;
    if (caps_.size() != o.caps_.size()) return false;
    for (const auto& [i, cap] : caps_) {
        auto it = o.caps_.find(i);
        if (it == o.caps_.end() || it->second.cap != cap.cap) return false;
        if (it->second.rewrite.size() != cap.rewrite.size()) return false;
        for (size_t t = 0; t < cap.rewrite.size(); ++t) {
            if (cap.rewrite[t].first != it->second.rewrite[t].first ||
                cap.rewrite[t].second != it->second.rewrite[t].second)
                return false;
        }
    }
    return true;
}

void Presentation::require_same(const PresentationPtr& a, const PresentationPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b))
        throw mixed_presentation("values come from different presentations");
}

std::shared_ptr<Presentation> Presentation::extend(const Presentation& base,
                                                   const GeneratorDecl& extra,
                                                   int cap, int truncation) {
    if (extra.degree % 2 != 0)
        throw engine_error("capped generators must have even degree");
    auto gens = base.gens_;
    gens.push_back(extra);
    auto p = std::make_shared<Presentation>(base.field_, std::move(gens), truncation);
    p->caps_ = {};
    for (const auto& [i, c] : base.caps_) {
        // Re-home inherited rewrites: same exponents plus a trailing zero.
        CappedPower widened{c.cap, {}};
        for (const auto& [m, s] : c.rewrite) {
            Monomial w = m;
            w.exps.push_back(0);
            widened.rewrite.emplace_back(std::move(w), s);
        }
        p->caps_.emplace(i, std::move(widened));
    }
    p->caps_.emplace(p->gens_.size() - 1, CappedPower{cap, {}});
    return p;
}

void Presentation::set_rewrite(size_t gen, std::vector<std::pair<Monomial, Scalar>> terms) {
    auto it = caps_.find(gen);
    if (it == caps_.end()) throw engine_error("generator has no power cap");
    int target = it->second.cap * gens_[gen].degree;
    for (const auto& [m, s] : terms) {
        (void)s;
        if (degree_of(m) != target)
            throw engine_error("rewrite terms must be homogeneous of the capped degree");
    }
    it->second.rewrite = std::move(terms);
}

}  // namespace massey
