#ifndef MASSEY_FIELD_HPP
#define MASSEY_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "massey/errors.hpp"

namespace massey {

/* Coefficient field: the rationals (characteristic 0) or a prime field
 * F_p with p an odd prime below 2^31. p = 2 is rejected so that odd
 * generators square to zero in every characteristic we support. */
class Field {
  public:
    static Field rationals() { return Field(0); }
    static Field prime(uint32_t p);

    bool is_rational() const { return p_ == 0; }
    uint32_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string to_string() const;  // "Q" or "F<p>"

  private:
    explicit Field(uint32_t p) : p_(p) {}
    uint32_t p_;
};

bool is_odd_prime(uint32_t n);

/* Exact field element. Rational values are kept canonical (lowest terms,
 * positive denominator) by GMP; residues are kept in [0, p). */
class Scalar {
  public:
    Scalar() : p_(0), r_(0) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long v);
    static Scalar rational(const mpq_class& q);
    static Scalar residue(uint32_t p, unsigned long long r);

    const Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const mpq_class& rational_value() const { return q_; }
    uint64_t residue_value() const { return r_; }

    /* "−3/7" over Q, "5 mod 11" over F_11. */
    std::string to_string() const;
    /* Inverse of to_string; also accepts plain integers over F_p. */
    static Scalar parse(const Field& f, const std::string& text);

  private:
    Scalar(uint32_t p, uint64_t r) : p_(p), r_(r) {}
    explicit Scalar(mpq_class q) : p_(0), r_(0), q_(std::move(q)) {}

    void check_same_field(const Scalar& o) const;

    uint32_t p_;    // 0 = rational
    uint64_t r_;    // residue when p_ != 0
    mpq_class q_;   // value when p_ == 0
};

}  // namespace massey

#endif
