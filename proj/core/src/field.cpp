#include "massey/field.hpp"

#include <cstdlib>

namespace massey {

bool is_odd_prime(uint32_t n) {
    if (n < 3 || n % 2 == 0) return false;
    // Deterministic Miller-Rabin; bases 2,3,5,7 decide primality below 3.2e9.
    auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) { return (a * b) % m; };
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        if (a % n == 0) continue;
        uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = mulmod(x, base, n);
            base = mulmod(base, base, n);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Field Field::prime(uint32_t p) {
    if (p == 2) throw engine_error("field characteristic 2 is not supported");
    if (p >= (1u << 31) || !is_odd_prime(p))
        throw engine_error("field modulus must be an odd prime below 2^31, got " + std::to_string(p));
    return Field(p);
}

std::string Field::to_string() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) {
    return f.is_rational() ? Scalar(mpq_class(0)) : Scalar(f.characteristic(), 0);
}

Scalar Scalar::one(const Field& f) {
    return f.is_rational() ? Scalar(mpq_class(1)) : Scalar(f.characteristic(), 1);
}

Scalar Scalar::of_int(const Field& f, long v) {
    if (f.is_rational()) return Scalar(mpq_class(v));
    uint32_t p = f.characteristic();
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return Scalar(p, static_cast<uint64_t>(r));
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(c);
}

Scalar Scalar::residue(uint32_t p, unsigned long long r) {
    return Scalar(p, r % p);
}

const Field Scalar::field() const {
    return p_ == 0 ? Field::rationals() : Field::prime(p_);
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_)
        throw engine_error("scalar arithmetic across different fields");
}

Scalar Scalar::operator-() const {
    if (p_ == 0) return Scalar(mpq_class(-q_));
    return Scalar(p_, r_ == 0 ? 0 : p_ - r_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (p_ == 0) return Scalar(mpq_class(q_ + o.q_));
    return Scalar(p_, (r_ + o.r_) % p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (p_ == 0) return Scalar(mpq_class(q_ - o.q_));
    return Scalar(p_, (r_ + p_ - o.r_) % p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (p_ == 0) return Scalar(mpq_class(q_ * o.q_));
    return Scalar(p_, (r_ * o.r_) % p_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw engine_error("inverse of zero");
    if (p_ == 0) return Scalar(mpq_class(1 / q_));
    // Extended Euclid on (r, p).
    int64_t a = static_cast<int64_t>(r_), m = static_cast<int64_t>(p_);
    int64_t x0 = 0, x1 = 1, b = m;
    while (a > 1) {
        int64_t q = a / b;
        int64_t t = b; b = a % b; a = t;
        t = x0; x0 = x1 - q * x0; x1 = t;
    }
    if (x1 < 0) x1 += m;
    return Scalar(p_, static_cast<uint64_t>(x1));
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
    if (p_ == 0) return q_.get_str();
    return std::to_string(r_) + " mod " + std::to_string(p_);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto fail = [&] { throw parse_error("malformed scalar '" + text + "'"); };
    std::string s = text;
    auto mod_pos = s.find(" mod ");
    if (mod_pos != std::string::npos) {
        if (f.is_rational()) fail();
        unsigned long p = std::strtoul(s.substr(mod_pos + 5).c_str(), nullptr, 10);
        if (p != f.characteristic()) fail();
        s = s.substr(0, mod_pos);
    }
    if (s.empty()) fail();
    try {
        mpq_class q(s);
        q.canonicalize();
        if (f.is_rational()) return Scalar(q);
        // Reduce a/b mod p.
        uint32_t p = f.characteristic();
        mpz_class num = q.get_num() % p, den = q.get_den() % p;
        if (num < 0) num += p;
        Scalar n = Scalar(p, num.get_ui());
        Scalar d = Scalar(p, den.get_ui());
        return n / d;
    } catch (const std::invalid_argument&) {
        fail();
    }
    return Scalar::zero(f);  // unreachable
}

}  // namespace massey
