#ifndef MASSEY_PRESENTATION_HPP
#define MASSEY_PRESENTATION_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "massey/errors.hpp"
#include "massey/field.hpp"

namespace massey {

struct GeneratorDecl {
    std::string name;
    int degree = 0;  // positive

    bool operator==(const GeneratorDecl& o) const {
        return name == o.name && degree == o.degree;
    }
};

/* Exponent vector over the generators of one presentation, in declaration
 * order. Canonical monomials never square an odd generator and never
 * exceed a generator's power cap. */
struct Monomial {
    std::vector<uint16_t> exps;

    static Monomial one(size_t ngens) { return Monomial{std::vector<uint16_t>(ngens, 0)}; }
    bool is_one() const {
        for (auto e : exps) if (e) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
};

/* Canonical monomial order: a comes before b when a's exponent sequence is
 * lexicographically larger (so x1*x2 < x1*x3 < ... < x3*x4 reads like a
 * dictionary on sorted words). Deterministic everywhere downstream. */
inline int monomial_cmp(const Monomial& a, const Monomial& b) {
    size_t n = std::min(a.exps.size(), b.exps.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
    }
    if (a.exps.size() != b.exps.size())
        return a.exps.size() > b.exps.size() ? -1 : 1;
    return 0;
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_cmp(a, b) < 0;
    }
};

/* Free graded-commutative algebra on named generators, truncated above a
 * fixed top degree. Even generators may carry a power cap with a rewrite
 * rule g^cap = <lower powers>, which is how projectivization relations
 * enter; the plain free algebra has no rewrites. Immutable once built. */
class Presentation {
  public:
    struct CappedPower {
        int cap = 0;  // smallest forbidden exponent
        std::vector<std::pair<Monomial, Scalar>> rewrite;  // value of g^cap
    };

    Presentation(Field field, std::vector<GeneratorDecl> generators, int truncation);

    const Field& field() const { return field_; }
    int truncation() const { return truncation_; }
    size_t generator_count() const { return gens_.size(); }
    const std::vector<GeneratorDecl>& generators() const { return gens_; }
    const GeneratorDecl& generator(size_t i) const { return gens_[i]; }
    std::optional<size_t> generator_index(const std::string& name) const;

    /* Power cap for generator i; odd generators are implicitly capped at 2
     * (squares vanish), even uncapped generators only by the truncation. */
    const CappedPower* capped_power(size_t i) const;

    int degree_of(const Monomial& m) const;
    bool is_canonical(const Monomial& m) const;

    /* Koszul-sign product of canonical monomials in the free algebra:
     * +-1 and the merged monomial, or nullopt when an odd generator would
     * square or the degree exceeds the truncation. Exceeding a power cap
     * is legal here; rewriting happens at the vector level. */
    std::pair<int, std::optional<Monomial>> normalize_product(const Monomial& a,
                                                              const Monomial& b) const;

    /* All canonical monomials of the given degree, canonical order. */
    const std::vector<Monomial>& basis_of_degree(int n) const;
    /* Position of a canonical monomial inside basis_of_degree. */
    size_t monomial_index(int n, const Monomial& m) const;

    std::string render(const Monomial& m) const;

    bool operator==(const Presentation& o) const;

    /* Structural compatibility check used by every cross-value operation. */
    static void require_same(const std::shared_ptr<const Presentation>& a,
                             const std::shared_ptr<const Presentation>& b);

    /* Extension used by the projectivization constructor: same field and
     * generators plus one capped even generator appended. The rewrite is
     * attached afterwards because its terms live in the new presentation. */
    static std::shared_ptr<Presentation> extend(const Presentation& base,
                                                const GeneratorDecl& extra,
                                                int cap, int truncation);
    void set_rewrite(size_t gen, std::vector<std::pair<Monomial, Scalar>> terms);

  private:
    Field field_;
    std::vector<GeneratorDecl> gens_;
    int truncation_;
    std::map<std::string, size_t> index_;
    std::map<size_t, CappedPower> caps_;

    mutable std::mutex cache_mutex_;
    mutable std::map<int, std::vector<Monomial>> basis_cache_;
    mutable std::map<int, std::map<Monomial, size_t, MonomialLess>> index_cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

}  // namespace massey

#endif
