#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "lcadual/errors.hpp"

namespace lcadual {

/// The coefficient field: a prime field F_p (p < 2^31) or the rationals Q.
///
/// Prime moduli are verified prime at construction; products of residues fit
/// in 64-bit intermediates because p < 2^31.
class Field {
public:
    enum class Kind { Prime, Rationals };

    static Field prime(std::uint64_t p);
    static Field rationals();

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::Prime; }

    /// p for prime fields; throws for Q.
    std::uint64_t modulus() const;

    /// p for prime fields, 0 for Q.
    std::uint64_t characteristic() const { return kind_ == Kind::Prime ? p_ : 0; }

    /// "F<p>" or "Q", matching the document grammar.
    std::string name() const;

    bool operator==(const Field& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

/// An exact field element: a residue in [0, p) or a rational in lowest terms.
///
/// All arithmetic is exact; operations on scalars from different fields throw
/// UsageError.
class Scalar {
public:
    /// Default-constructs rational zero. Prefer the named factories.
    Scalar() : field_(Field::rationals()) {}

    static Scalar zero(const Field& field);
    static Scalar one(const Field& field);
    static Scalar from_integer(const Field& field, std::int64_t value);
    /// Parses "7", "-3" or (rationals only) "num/den".
    static Scalar from_string(const Field& field, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    /// Prime field: canonical residue. Rationals: "n" or "n/d", lowest terms,
    /// positive denominator.
    std::string str() const;

    /// Residue value; prime fields only.
    std::uint64_t residue() const;
    /// Rational value; Q only.
    const mpq_class& rational() const;

private:
    explicit Scalar(const Field& field) : field_(field) {}
    void require_same_field(const Scalar& other) const;

    Field field_;
    std::uint64_t residue_ = 0;  // prime fields
    mpq_class rational_ = 0;     // rationals
};

}  // namespace lcadual
