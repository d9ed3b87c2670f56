#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "essalg/common.hpp"

namespace essalg {

/// Coefficient field: the rationals, or a prime field F_p with p < 2^31.
struct Field {
    enum class Type : std::uint8_t { Q, Fp };

    Type type = Type::Q;
    std::uint32_t p = 0;  // modulus, meaningful only for Fp

    static Field rationals() { return Field{Type::Q, 0}; }

    static Field prime(std::uint32_t p) {
        if (!is_prime_u32(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
        if (p >= (1u << 31)) throw InputError("field modulus must be < 2^31");
        return Field{Type::Fp, p};
    }

    bool is_rationals() const { return type == Type::Q; }

    bool operator==(const Field& o) const { return type == o.type && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const {
        return type == Type::Q ? std::string("Q") : "F" + std::to_string(p);
    }

    static bool is_prime_u32(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

/// Exact field element tagged with its field. Rationals are kept reduced with
/// positive denominator (mpq_class canonicalizes); F_p residues live in [0, p).
class Scalar {
  public:
    Scalar() : tag_(Field::Type::Q), q_(0) {}

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }

    static Scalar from_int(const Field& f, long v) {
        if (f.is_rationals()) return rational(mpq_class(v));
        long r = v % static_cast<long>(f.p);
        if (r < 0) r += f.p;
        return fp(static_cast<std::uint32_t>(r), f.p);
    }

    static Scalar from_mpz(const Field& f, const mpz_class& v) {
        if (f.is_rationals()) return rational(mpq_class(v));
        mpz_class r = v % f.p;
        if (r < 0) r += f.p;
        return fp(static_cast<std::uint32_t>(r.get_ui()), f.p);
    }

    static Scalar rational(mpq_class q) {
        Scalar s;
        s.tag_ = Field::Type::Q;
        q.canonicalize();
        s.q_ = std::move(q);
        return s;
    }

    static Scalar fp(std::uint32_t v, std::uint32_t p) {
        Scalar s;
        s.tag_ = Field::Type::Fp;
        s.p_ = p;
        s.r_ = v % p;
        return s;
    }

    Field field() const {
        return tag_ == Field::Type::Q ? Field::rationals() : Field{Field::Type::Fp, p_};
    }

    bool is_zero() const { return tag_ == Field::Type::Q ? q_ == 0 : r_ == 0; }
    bool is_one() const { return tag_ == Field::Type::Q ? q_ == 1 : r_ == 1; }

    const mpq_class& rational_value() const {
        if (tag_ != Field::Type::Q) throw MathError("rational_value on F_p scalar");
        return q_;
    }

    std::uint32_t fp_value() const {
        if (tag_ != Field::Type::Fp) throw MathError("fp_value on rational scalar");
        return r_;
    }

    Scalar operator-() const {
        if (tag_ == Field::Type::Q) return rational(-q_);
        return fp(r_ == 0 ? 0 : p_ - r_, p_);
    }

    Scalar operator+(const Scalar& o) const {
        check_same(o);
        if (tag_ == Field::Type::Q) return rational(q_ + o.q_);
        return fp(static_cast<std::uint32_t>((std::uint64_t(r_) + o.r_) % p_), p_);
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        check_same(o);
        if (tag_ == Field::Type::Q) return rational(q_ * o.q_);
        return fp(static_cast<std::uint32_t>((std::uint64_t(r_) * o.r_) % p_), p_);
    }

    Scalar inverse() const {
        if (is_zero()) throw MathError("inverse of zero");
        if (tag_ == Field::Type::Q) return rational(1 / q_);
        // extended Euclid on (r_, p_)
        std::int64_t a = r_, m = p_, x0 = 1, x1 = 0;
        while (m != 0) {
            std::int64_t q = a / m;
            std::int64_t t = a - q * m;
            a = m;
            m = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        std::int64_t inv = x0 % p_;
        if (inv < 0) inv += p_;
        return fp(static_cast<std::uint32_t>(inv), p_);
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    bool operator==(const Scalar& o) const {
        if (tag_ != o.tag_) return false;
        if (tag_ == Field::Type::Q) return q_ == o.q_;
        return p_ == o.p_ && r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form: "3", "-1/2", or the residue "5".
    std::string str() const {
        if (tag_ == Field::Type::Q) return q_.get_str();
        return std::to_string(r_);
    }

  private:
    void check_same(const Scalar& o) const {
        if (tag_ != o.tag_ || (tag_ == Field::Type::Fp && p_ != o.p_))
            throw MathError("scalar field mismatch");
    }

    Field::Type tag_;
    mpq_class q_;
    std::uint32_t r_ = 0;
    std::uint32_t p_ = 0;
};

}  // namespace essalg
