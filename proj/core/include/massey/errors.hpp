#ifndef MASSEY_ERRORS_HPP
#define MASSEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace massey {

struct engine_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Values from two different presentations were combined. */
struct mixed_presentation : engine_error {
    using engine_error::engine_error;
};

struct degree_out_of_range : engine_error {
    using engine_error::engine_error;
};

struct degree_mismatch : engine_error {
    using engine_error::engine_error;
};

/* Requested a primitive of an element that is not a coboundary.
 * The obstruction (the input reduced against the coboundary space)
 * is kept as a rendered string; callers that need the vector use
 * DgaModel::try_solve_primitive instead of the throwing entry point. */
struct not_a_boundary : engine_error {
    explicit not_a_boundary(const std::string& what, std::string obstruction)
        : engine_error(what), obstruction_class(std::move(obstruction)) {}
    std::string obstruction_class;
};

struct not_a_cocycle : engine_error {
    using engine_error::engine_error;
};

struct invalid_differential : engine_error {
    using engine_error::engine_error;
};

struct invalid_morphism : engine_error {
    using engine_error::engine_error;
};

struct jacobi_failure : engine_error {
    jacobi_failure(const std::string& what, int i, int j, int k)
        : engine_error(what), wi(i), wj(j), wk(k) {}
    int wi, wj, wk;  // witness triple
};

struct not_nilpotent : engine_error {
    using engine_error::engine_error;
};

/* A hypothesis of one of the certified constructions does not hold
 * (fiber parameter too small, base triple not essential, ...). */
struct hypothesis_failure : engine_error {
    using engine_error::engine_error;
};

struct centrality_required : engine_error {
    using engine_error::engine_error;
};

struct exponent_too_large : engine_error {
    using engine_error::engine_error;
};

struct budget_exceeded : engine_error {
    budget_exceeded(const std::string& what, unsigned long long estimate)
        : engine_error(what), estimate(estimate) {}
    unsigned long long estimate;
};

struct parse_error : engine_error {
    parse_error(const std::string& what, std::string where = {})
        : engine_error(what), where(std::move(where)) {}
    std::string where;  // "file:line:col" or a JSON pointer-ish location
};

struct corrupt_certificate : engine_error {
    using engine_error::engine_error;
};

}  // namespace massey

#endif
