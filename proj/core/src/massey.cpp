#include "massey/massey.hpp"

#include <algorithm>
#include <limits>

namespace massey {

const GradedVector& DefiningSystem::at(int i, int j) const {
    auto it = entries.find({i, j});
    if (it == entries.end())
        throw engine_error("defining system has no entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    return it->second;
}

std::vector<std::pair<int, int>> DefiningSystem::index_pairs(int arity) {
    std::vector<std::pair<int, int>> out;
    for (int s = 1; s <= arity - 1; ++s) {
        for (int i = 1; i + s <= arity + 1; ++i) {
            if (i == 1 && i + s == arity + 1) continue;
            out.emplace_back(i, i + s);
        }
    }
    return out;
}

std::string to_string(MasseyStatus s) {
    switch (s) {
        case MasseyStatus::Empty: return "empty";
        case MasseyStatus::NonEmpty: return "nonempty";
        default: return "unknown";
    }
}

std::string to_string(Essentiality e) {
    switch (e) {
        case Essentiality::Essential: return "essential";
        case Essentiality::Inessential: return "inessential";
        default: return "unknown";
    }
}

int entry_degree(const std::vector<CohomologyClass>& classes, int i, int j) {
    int d = 0;
    for (int r = i; r <= j - 1; ++r) d += classes[size_t(r - 1)].degree();
    return d - (j - i - 1);
}

static int total_degree(const std::vector<CohomologyClass>& classes) {
    int d = 0;
    for (const auto& c : classes) d += c.degree();
    return d - (int(classes.size()) - 2);
}

static void check_inputs(const DgaModel& model, const std::vector<CohomologyClass>& classes) {
    if (classes.size() < 3)
        throw engine_error("Massey products need at least three classes");
    for (const auto& c : classes)
        Presentation::require_same(model.presentation(), c.rep().presentation());
    int D = total_degree(classes);
    if (D > model.truncation())
        throw degree_out_of_range("product degree " + std::to_string(D) +
                                  " exceeds the truncation degree " +
                                  std::to_string(model.truncation()));
}

/* Right-hand side of condition (2) for entry (i,j). */
static GradedVector condition_rhs(const DefiningSystem& ds, int i, int j, int degree,
                                  const PresentationPtr& pres) {
    GradedVector rhs = GradedVector::zero(pres, degree + 1);
    for (int r = i + 1; r <= j - 1; ++r)
        rhs = rhs + ds.at(i, r).bar() * ds.at(r, j);
    return rhs;
}

std::vector<SystemViolation> validate_defining_system(const DgaModel& model,
                                                      const DefiningSystem& ds,
                                                      const std::vector<CohomologyClass>& classes) {
    std::vector<SystemViolation> out;
    int n = int(classes.size());
    if (ds.arity != n) {
        out.push_back({0, 0, "arity", "system arity " + std::to_string(ds.arity) +
                                          " differs from class count " + std::to_string(n)});
        return out;
    }
    auto pairs = DefiningSystem::index_pairs(n);
    for (auto [i, j] : pairs) {
        if (!ds.has(i, j)) out.push_back({i, j, "missing-entry", "entry absent"});
    }
    for (const auto& [ij, v] : ds.entries) {
        auto [i, j] = ij;
        bool in_family = i >= 1 && j <= n + 1 && i < j && !(i == 1 && j == n + 1) && j - i <= n;
        if (!in_family) {
            out.push_back({i, j, "extra-entry", "index pair outside the family"});
            continue;
        }
        int want = entry_degree(classes, i, j);
        if (!v.is_zero() && v.degree() != want)
            out.push_back({i, j, "degree",
                           "entry degree " + std::to_string(v.degree()) + ", expected " +
                               std::to_string(want)});
    }
    if (!out.empty()) return out;

    for (auto [i, j] : pairs) {
        const GradedVector& x = ds.at(i, j);
        if (j == i + 1) {
            if (!model.is_cocycle(x)) {
                out.push_back({i, j, "edge-not-cocycle", "d(x) = " + model.d(x).to_string()});
                continue;
            }
            CohomologyClass cls = model.reduce_to_class(
                x.is_zero() ? GradedVector::zero(model.presentation(), classes[size_t(i - 1)].degree())
                            : x);
            if (cls != classes[size_t(i - 1)])
                out.push_back({i, j, "edge-class",
                               "[x] = " + cls.rep().to_string() + ", expected " +
                                   classes[size_t(i - 1)].rep().to_string()});
        } else {
            GradedVector rhs =
                condition_rhs(ds, i, j, entry_degree(classes, i, j), model.presentation());
            GradedVector lhs = model.d(x);
            if (lhs != rhs)
                out.push_back({i, j, "differential",
                               "d(x) = " + lhs.to_string() + ", required " + rhs.to_string()});
        }
    }
    return out;
}

GradedVector c_vector(const DgaModel& model, const DefiningSystem& ds) {
    int n = ds.arity;
    if (n < 3) throw engine_error("c(X) needs arity >= 3");
    GradedVector c = GradedVector::zero(model.presentation(),
                                        ds.at(1, 2).degree() + ds.at(2, n + 1).degree());
    for (int r = 2; r <= n; ++r) c = c + ds.at(1, r).bar() * ds.at(r, n + 1);
    return c;
}

CohomologyClass c_of(const DgaModel& model, const DefiningSystem& ds) {
    GradedVector c = c_vector(model, ds);
    if (!model.is_cocycle(c))
        throw not_a_cocycle("c(X) is not a cocycle; the input system is not a defining system");
    return model.reduce_to_class(c);
}

namespace {

struct GreedyOutcome {
    std::optional<DefiningSystem> ds;
    int obstruction_i = 0, obstruction_j = 0;
    std::string obstruction;
};

GreedyOutcome build_greedy(const DgaModel& model, const std::vector<CohomologyClass>& classes) {
    int n = int(classes.size());
    DefiningSystem ds;
    ds.arity = n;
    for (int i = 1; i <= n; ++i) {
        GradedVector rep = classes[size_t(i - 1)].rep();
        if (rep.is_zero())
            rep = GradedVector::zero(model.presentation(), classes[size_t(i - 1)].degree());
        ds.set(i, i + 1, std::move(rep));
    }
    for (auto [i, j] : DefiningSystem::index_pairs(n)) {
        if (j == i + 1) continue;
        int deg = entry_degree(classes, i, j);
        GradedVector rhs = condition_rhs(ds, i, j, deg, model.presentation());
        auto outcome = model.try_solve_primitive(rhs);
        if (!outcome.primitive) {
            GreedyOutcome g;
            g.obstruction_i = i;
            g.obstruction_j = j;
            g.obstruction = outcome.obstruction.to_string();
            return g;
        }
        GradedVector x = outcome.primitive->x;
        if (x.is_zero()) x = GradedVector::zero(model.presentation(), deg);
        ds.set(i, j, std::move(x));
    }
    GreedyOutcome g;
    g.ds = std::move(ds);
    return g;
}

/* Witnessed part of the indeterminacy: perturbing the free entries
 * (1,n) and (2,n+1) realizes the (a_1, a_n) ideal slice. */
SubspaceBasis witnessed_indeterminacy(const DgaModel& model,
                                      const std::vector<CohomologyClass>& classes) {
    int D = total_degree(classes);
    return model.ideal_slice({classes.front(), classes.back()}, D);
}

}  // namespace

MasseyVerdict massey_nfold_witness(const DgaModel& model,
                                   const std::vector<CohomologyClass>& classes) {
    check_inputs(model, classes);
    int n = int(classes.size());
    MasseyVerdict v;
    v.arity = n;
    v.inputs = classes;

    GreedyOutcome g = build_greedy(model, classes);
    if (!g.ds) {
        if (g.obstruction_j - g.obstruction_i == 2) {
            // A span-2 condition is unsolvable iff the consecutive cup
            // product is nonzero; no defining system exists.
            v.status = MasseyStatus::Empty;
            v.essential = Essentiality::Inessential;
            v.note = "cup product of inputs " + std::to_string(g.obstruction_i) + "," +
                     std::to_string(g.obstruction_i + 1) + " is nonzero: " + g.obstruction;
        } else {
            v.status = MasseyStatus::Unknown;
            v.essential = Essentiality::Unknown;
            v.note = "greedy obstruction at (" + std::to_string(g.obstruction_i) + "," +
                     std::to_string(g.obstruction_j) + "): " + g.obstruction;
        }
        v.indeterminacy = witnessed_indeterminacy(model, classes);
        v.indeterminacy_complete = false;
        return v;
    }

    v.status = MasseyStatus::NonEmpty;
    v.representative = c_of(model, *g.ds);
    v.indeterminacy = witnessed_indeterminacy(model, classes);
    v.indeterminacy_complete = (n == 3);
    Membership m = model.member(*v.representative, v.indeterminacy);
    if (n == 3) {
        v.essential = m.member ? Essentiality::Inessential : Essentiality::Essential;
    } else {
        // Landing inside the witnessed subset proves 0 is attained;
        // the converse needs the exhaustive engine.
        v.essential = m.member ? Essentiality::Inessential : Essentiality::Unknown;
    }
    v.witnesses.push_back(std::move(*g.ds));
    return v;
}

MasseyVerdict triple_massey(const DgaModel& model, const CohomologyClass& a,
                            const CohomologyClass& b, const CohomologyClass& c) {
    return massey_nfold_witness(model, {a, b, c});
}

ExhaustiveResult massey_nfold_exhaustive(const DgaModel& model,
                                         const std::vector<CohomologyClass>& classes,
                                         const ExhaustiveOptions& opts) {
    check_inputs(model, classes);
    if (model.field().is_rational())
        throw engine_error("exhaustive enumeration requires a prime field");
    uint32_t p = model.field().characteristic();
    int n = int(classes.size());
    auto pairs = DefiningSystem::index_pairs(n);

    // Per-entry parameter spaces: coboundaries on the edges, cocycles inside.
    std::vector<std::vector<GradedVector>> spans;
    unsigned long long estimate = 1;
    bool overflow = false;
    for (auto [i, j] : pairs) {
        int deg = entry_degree(classes, i, j);
        std::vector<GradedVector> span;
        if (deg >= 0 && deg <= model.truncation())
            span = (j == i + 1) ? model.coboundary_basis(deg) : model.cocycle_basis(deg);
        for (size_t t = 0; t < span.size(); ++t) {
            if (estimate > std::numeric_limits<unsigned long long>::max() / p) {
                overflow = true;
                break;
            }
            estimate *= p;
        }
        spans.push_back(std::move(span));
        if (overflow) break;
    }
    if (overflow || estimate > opts.budget)
        throw budget_exceeded("enumeration size " +
                                  (overflow ? std::string("overflows")
                                            : std::to_string(estimate)) +
                                  " exceeds the budget " + std::to_string(opts.budget),
                              overflow ? std::numeric_limits<unsigned long long>::max()
                                       : estimate);

    ExhaustiveResult result;
    std::map<std::string, CohomologyClass> values;
    DefiningSystem ds;
    ds.arity = n;

    auto rec = [&](auto&& self, size_t t) -> void {
        if (t == pairs.size()) {
            ++result.systems_enumerated;
            CohomologyClass value = c_of(model, ds);
            if (!result.witness) result.witness = ds;
            values.emplace(value.rep().to_string(), value);
            return;
        }
        auto [i, j] = pairs[t];
        int deg = entry_degree(classes, i, j);
        GradedVector base(model.presentation(), deg);
        if (j == i + 1) {
            base = classes[size_t(i - 1)].rep();
            if (base.is_zero()) base = GradedVector::zero(model.presentation(), deg);
        } else {
            GradedVector rhs = condition_rhs(ds, i, j, deg, model.presentation());
            auto outcome = model.try_solve_primitive(rhs);
            if (!outcome.primitive) return;  // dead branch
            base = outcome.primitive->x;
            if (base.is_zero()) base = GradedVector::zero(model.presentation(), deg);
        }
        const auto& span = spans[t];
        std::vector<uint32_t> digits(span.size(), 0);
        while (true) {
            GradedVector x = base;
            for (size_t s = 0; s < span.size(); ++s) {
                if (digits[s])
                    x = x + span[s].scaled(Scalar::of_int(model.field(), long(digits[s])));
            }
            ds.set(i, j, std::move(x));
            self(self, t + 1);
            size_t carry = 0;
            while (carry < digits.size()) {
                if (++digits[carry] < p) break;
                digits[carry] = 0;
                ++carry;
            }
            if (carry == digits.size()) break;
        }
        ds.entries.erase({i, j});
    };
    rec(rec, 0);

    for (auto& [key, value] : values) {
        if (value.is_zero()) result.contains_zero = true;
        result.value_set.push_back(value);
    }
    result.essential = !result.value_set.empty() && !result.contains_zero;
    return result;
}

DefiningSystem scale_defining_system(const DgaModel& model, const DefiningSystem& ds,
                                     const GradedVector& central_rep, int k) {
    Presentation::require_same(model.presentation(), central_rep.presentation());
    if (k < 1 || k > ds.arity)
        throw engine_error("scaling position k outside 1..arity");
    if (!model.is_cocycle(central_rep))
        throw not_a_cocycle("scaling element must be a cocycle");
    if (!central_rep.is_zero() && central_rep.degree() % 2 != 0)
        throw centrality_required(
            "scaling needs a strictly central element; in a graded-commutative "
            "model that means even degree (got degree " +
            std::to_string(central_rep.degree()) + ")");
    DefiningSystem out;
    out.arity = ds.arity;
    for (const auto& [ij, x] : ds.entries) {
        auto [i, j] = ij;
        if (i <= k && j >= k + 1) {
            out.set(i, j, central_rep * x);
        } else {
            out.set(i, j, x);
        }
    }
    return out;
}

MasseyVerdict pushforward_massey(const DgaMorphism& f, const MasseyVerdict& verdict) {
    if (verdict.status != MasseyStatus::NonEmpty || verdict.witnesses.empty())
        throw hypothesis_failure("pushforward needs a nonempty verdict with a witness system");
    const DgaModel& target = *f.target();

    std::vector<CohomologyClass> images;
    for (const auto& c : verdict.inputs) images.push_back(f.apply(c));

    DefiningSystem pushed;
    pushed.arity = verdict.arity;
    for (const auto& [ij, x] : verdict.witnesses.front().entries)
        pushed.entries[ij] = f.apply(x);

    auto violations = validate_defining_system(target, pushed, images);
    if (!violations.empty())
        throw engine_error("pushforward produced an invalid defining system; "
                           "the morphism is not a chain map");

    MasseyVerdict v;
    v.arity = verdict.arity;
    v.inputs = images;
    v.status = MasseyStatus::NonEmpty;
    v.representative = c_of(target, pushed);
    v.indeterminacy = target.ideal_slice({images.front(), images.back()},
                                         total_degree(images));
    v.indeterminacy_complete = (v.arity == 3);
    Membership m = target.member(*v.representative, v.indeterminacy);
    if (v.arity == 3) {
        v.essential = m.member ? Essentiality::Inessential : Essentiality::Essential;
    } else {
        v.essential = m.member ? Essentiality::Inessential : Essentiality::Unknown;
    }
    v.witnesses.push_back(std::move(pushed));
    return v;
}

RestrictedPowerResult restricted_power(const DgaModel& model, const CohomologyClass& u, int k) {
    Presentation::require_same(model.presentation(), u.rep().presentation());
    if (k < 2) throw engine_error("restricted powers need exponent k >= 2");
    int value_degree = k * u.degree() - (k - 2);
    if (value_degree > model.truncation())
        throw degree_out_of_range("restricted power degree " + std::to_string(value_degree) +
                                  " exceeds the truncation degree " +
                                  std::to_string(model.truncation()));
    RestrictedPowerResult out;
    out.base = u;
    out.exponent = k;
    GradedVector x1 = u.rep();
    if (x1.is_zero()) x1 = GradedVector::zero(model.presentation(), u.degree());
    out.chain.push_back(x1);
    for (int r = 2; r <= k - 1; ++r) {
        int deg = r * u.degree() - (r - 1);
        GradedVector rhs = GradedVector::zero(model.presentation(), deg + 1);
        for (int i = 1; i <= r - 1; ++i)
            rhs = rhs + out.chain[size_t(i - 1)].bar() * out.chain[size_t(r - i - 1)];
        auto outcome = model.try_solve_primitive(rhs);
        if (!outcome.primitive) {
            out.defined = false;
            out.failed_at = r;
            out.obstruction = outcome.obstruction;
            return out;
        }
        GradedVector x = outcome.primitive->x;
        if (x.is_zero()) x = GradedVector::zero(model.presentation(), deg);
        out.chain.push_back(std::move(x));
    }
    GradedVector value = GradedVector::zero(model.presentation(), value_degree);
    for (int i = 1; i <= k - 1; ++i)
        value = value + out.chain[size_t(i - 1)].bar() * out.chain[size_t(k - i - 1)];
    out.defined = true;
    out.value = model.reduce_to_class(value);
    return out;
}

}  // namespace massey
