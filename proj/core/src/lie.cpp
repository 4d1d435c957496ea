#include "massey/lie.hpp"

#include <array>

#include "massey/linalg.hpp"

namespace massey {

void LieAlgebraData::set_bracket(size_t i, size_t j, std::vector<Scalar> coeffs) {
    if (i >= j || j >= dimension)
        throw engine_error("brackets are stored for i < j < dimension");
    if (coeffs.size() != dimension)
        throw engine_error("bracket coefficient vector has the wrong length");
    brackets[{i, j}] = std::move(coeffs);
}

std::vector<Scalar> LieAlgebraData::bracket(size_t i, size_t j) const {
    std::vector<Scalar> out(dimension, Scalar::zero(field));
    if (i == j) return out;
    bool flip = i > j;
    auto it = brackets.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == brackets.end()) return out;
    for (size_t k = 0; k < dimension; ++k)
        out[k] = flip ? -it->second[k] : it->second[k];
    return out;
}

std::optional<std::array<int, 3>> LieAlgebraData::jacobi_witness() const {
    for (size_t i = 0; i < dimension; ++i) {
        for (size_t j = i + 1; j < dimension; ++j) {
            for (size_t l = j + 1; l < dimension; ++l) {
                std::vector<Scalar> total(dimension, Scalar::zero(field));
                // [[e_a, e_b], e_c] summed over cyclic (i,j,l).
                const std::array<std::array<size_t, 3>, 3> cyc = {
                    std::array<size_t, 3>{i, j, l}, {j, l, i}, {l, i, j}};
                for (const auto& [a, b, c] : cyc) {
                    std::vector<Scalar> inner = bracket(a, b);
                    for (size_t m = 0; m < dimension; ++m) {
                        if (inner[m].is_zero()) continue;
                        std::vector<Scalar> outer = bracket(m, c);
                        for (size_t k = 0; k < dimension; ++k)
                            total[k] += inner[m] * outer[k];
                    }
                }
                if (!row_is_zero(total)) return std::array<int, 3>{int(i), int(j), int(l)};
            }
        }
    }
    return std::nullopt;
}

bool LieAlgebraData::is_nilpotent() const {
    // Lower central series on coordinate spans.
    std::vector<Row> current;
    for (size_t i = 0; i < dimension; ++i) {
        Row e(dimension, Scalar::zero(field));
        e[i] = Scalar::one(field);
        current.push_back(std::move(e));
    }
    auto bracket_rows = [&](const std::vector<Row>& span) {
        std::vector<Row> next;
        for (const auto& v : span) {
            for (size_t j = 0; j < dimension; ++j) {
                Row w(dimension, Scalar::zero(field));
                bool nz = false;
                for (size_t i = 0; i < dimension; ++i) {
                    if (v[i].is_zero()) continue;
                    auto br = bracket(i, j);
                    for (size_t k = 0; k < dimension; ++k) {
                        if (!br[k].is_zero()) {
                            w[k] += v[i] * br[k];
                            nz = true;
                        }
                    }
                }
                if (nz && !row_is_zero(w)) next.push_back(std::move(w));
            }
        }
        return rref(std::move(next), field, dimension);
    };
    Echelon term = bracket_rows(current);
    for (size_t step = 0; step < dimension + 1; ++step) {
        if (term.rank() == 0) return true;
        Echelon next = bracket_rows(term.rows);
        if (next.rank() == term.rank()) return false;  // stabilized nonzero
        term = std::move(next);
    }
    return term.rank() == 0;
}

DgaModelPtr chevalley_eilenberg(const LieAlgebraData& L, const std::vector<std::string>& names) {
    if (auto w = L.jacobi_witness()) {
        auto [i, j, k] = *w;
        throw jacobi_failure("Jacobi identity fails on basis triple (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")",
                             i, j, k);
    }
    if (!L.is_nilpotent())
        throw not_nilpotent("Lie algebra is not nilpotent");

    std::vector<GeneratorDecl> gens;
    for (size_t i = 0; i < L.dimension; ++i) {
        std::string name = i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        gens.push_back({name, 1});
    }
    auto pres = std::make_shared<Presentation>(L.field, std::move(gens), int(L.dimension));

    std::vector<GradedVector> diffs;
    for (size_t k = 0; k < L.dimension; ++k) {
        GradedVector dk = GradedVector::zero(pres, 2);
        for (size_t i = 0; i < L.dimension; ++i) {
            for (size_t j = i + 1; j < L.dimension; ++j) {
                auto br = L.bracket(i, j);
                if (br[k].is_zero()) continue;
                Monomial m = Monomial::one(L.dimension);
                m.exps[i] = 1;
                m.exps[j] = 1;
                dk = dk + GradedVector::term(pres, m, -br[k]);
            }
        }
        diffs.push_back(std::move(dk));
    }
    return free_cdga(pres, std::move(diffs));
}

DgaModelPtr free_cdga(PresentationPtr pres, std::vector<GradedVector> generator_differentials) {
    auto model = std::make_shared<DgaModel>(pres, std::move(generator_differentials));
    // d^2 is an even derivation, so vanishing on generators settles it.
    for (size_t i = 0; i < pres->generator_count(); ++i) {
        GradedVector dd = model->d(model->differential_of_generator(i));
        if (!dd.is_zero())
            throw invalid_differential("d^2(" + pres->generator(i).name +
                                       ") = " + dd.to_string());
    }
    return model;
}

}  // namespace massey
