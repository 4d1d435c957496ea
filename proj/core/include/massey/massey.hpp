#ifndef MASSEY_MASSEY_HPP
#define MASSEY_MASSEY_HPP

#include <optional>
#include <string>
#include <vector>

#include "massey/dga.hpp"
#include "massey/morphism.hpp"

namespace massey {

/* Family {x_ij}, 1 <= i < j <= n+1, (i,j) != (1,n+1), entries 1-based.
 * Edges x_{i,i+1} represent the input classes; every entry with j-i >= 2
 * satisfies d x_ij = sum_{r=i+1}^{j-1} bar(x_ir) x_rj. */
struct DefiningSystem {
    int arity = 0;
    std::map<std::pair<int, int>, GradedVector> entries;

    bool has(int i, int j) const { return entries.count({i, j}) != 0; }
    const GradedVector& at(int i, int j) const;
    void set(int i, int j, GradedVector v) { entries[{i, j}] = std::move(v); }

    /* All index pairs of the family for the given arity, ordered by
     * (j-i, i); this is also the greedy construction order. */
    static std::vector<std::pair<int, int>> index_pairs(int arity);
};

enum class MasseyStatus { Empty, NonEmpty, Unknown };
enum class Essentiality { Essential, Inessential, Unknown };

std::string to_string(MasseyStatus s);
std::string to_string(Essentiality e);

struct MasseyVerdict {
    int arity = 0;
    std::vector<CohomologyClass> inputs;
    MasseyStatus status = MasseyStatus::Unknown;
    std::optional<CohomologyClass> representative;
    SubspaceBasis indeterminacy;
    bool indeterminacy_complete = false;  // exact coset description (arity 3)
    Essentiality essential = Essentiality::Unknown;
    std::vector<DefiningSystem> witnesses;
    std::string note;
};

struct SystemViolation {
    int i = 0, j = 0;
    std::string kind;  // "missing-entry", "degree", "edge-class", "differential", ...
    std::string detail;
};

/* Degree that x_ij must have for the given input classes. */
int entry_degree(const std::vector<CohomologyClass>& classes, int i, int j);

std::vector<SystemViolation> validate_defining_system(const DgaModel& model,
                                                      const DefiningSystem& ds,
                                                      const std::vector<CohomologyClass>& classes);

/* sum_{r=2}^{n} bar(x_{1r}) x_{r,n+1}; a cocycle for every valid system. */
GradedVector c_vector(const DgaModel& model, const DefiningSystem& ds);
CohomologyClass c_of(const DgaModel& model, const DefiningSystem& ds);

MasseyVerdict triple_massey(const DgaModel& model, const CohomologyClass& a,
                            const CohomologyClass& b, const CohomologyClass& c);

/* Greedy canonical defining system (canonical primitives, built in
 * increasing j-i). Exact for arity 3; for higher arity a greedy
 * obstruction yields status Unknown, and essentiality is only claimed
 * when it is sound (member of the witnessed indeterminacy => Inessential). */
MasseyVerdict massey_nfold_witness(const DgaModel& model,
                                   const std::vector<CohomologyClass>& classes);

struct ExhaustiveOptions {
    unsigned long long budget = 10'000'000ULL;
};

struct ExhaustiveResult {
    std::vector<CohomologyClass> value_set;  // deterministic order
    bool contains_zero = false;
    bool essential = false;  // nonempty and no zero value
    unsigned long long systems_enumerated = 0;
    std::optional<DefiningSystem> witness;  // first system (canonical parameters)
};

/* Literal enumeration of every defining system over a prime field. */
ExhaustiveResult massey_nfold_exhaustive(const DgaModel& model,
                                         const std::vector<CohomologyClass>& classes,
                                         const ExhaustiveOptions& opts = {});

/* y_ij = a x_ij when i <= k <= j-1, x_ij otherwise; a must be a strictly
 * central cocycle (even degree or zero). The result is a defining system
 * for (a_1, ..., xi a_k, ..., a_n) with c(Y) = xi c(X). */
DefiningSystem scale_defining_system(const DgaModel& model, const DefiningSystem& ds,
                                     const GradedVector& central_rep, int k);

/* Entrywise image of the witness system; the verdict on the target is
 * recomputed from the pushed system, never inherited. */
MasseyVerdict pushforward_massey(const DgaMorphism& f, const MasseyVerdict& verdict);

struct RestrictedPowerResult {
    CohomologyClass base;
    int exponent = 0;
    std::vector<GradedVector> chain;  // x_1, ..., x_{k-1}
    bool defined = false;
    int failed_at = 0;  // r of the first failing solve when undefined
    GradedVector obstruction;
    std::optional<CohomologyClass> value;
};

/* Kraines power <u>^k via the diagonal-constant defining system
 * x_ij = x_{j-i}: d x_r = sum_{i<r} bar(x_i) x_{r-i}, canonical solves. */
RestrictedPowerResult restricted_power(const DgaModel& model, const CohomologyClass& u, int k);

}  // namespace massey

#endif
