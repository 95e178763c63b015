#include "lcadual/field.hpp"

namespace lcadual {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) {
        throw UsageError("prime field modulus must be < 2^31, got " + std::to_string(p));
    }
    if (!is_prime(p)) {
        throw UsageError("field modulus " + std::to_string(p) + " is not prime");
    }
    return Field(Kind::Prime, p);
}

Field Field::rationals() { return Field(Kind::Rationals, 0); }

std::uint64_t Field::modulus() const {
    if (kind_ != Kind::Prime) throw UsageError("modulus() called on the rational field");
    return p_;
}

std::string Field::name() const {
    return kind_ == Kind::Prime ? "F" + std::to_string(p_) : "Q";
}

Scalar Scalar::zero(const Field& field) { return Scalar(field); }

Scalar Scalar::one(const Field& field) { return from_integer(field, 1); }

Scalar Scalar::from_integer(const Field& field, std::int64_t value) {
    Scalar s(field);
    if (field.is_prime_field()) {
        const auto p = static_cast<std::int64_t>(field.modulus());
        std::int64_t r = value % p;
        if (r < 0) r += p;
        s.residue_ = static_cast<std::uint64_t>(r);
    } else {
        s.rational_ = mpq_class(static_cast<long>(value));
    }
    return s;
}

Scalar Scalar::from_string(const Field& field, const std::string& text) {
    const auto slash = text.find('/');
    if (field.is_prime_field()) {
        if (slash != std::string::npos) {
            throw UsageError("fractional coefficient '" + text + "' in a prime-field context");
        }
        // Reduce through GMP so arbitrarily long integer literals stay exact.
        mpz_class z;
        if (z.set_str(text, 10) != 0) throw UsageError("bad integer literal '" + text + "'");
        mpz_class r = z % static_cast<long>(field.modulus());
        if (r < 0) r += static_cast<long>(field.modulus());
        Scalar s(field);
        s.residue_ = r.get_ui();
        return s;
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw UsageError("bad rational literal '" + text + "'");
    if (slash != std::string::npos && mpz_sgn(q.get_den().get_mpz_t()) == 0) {
        throw UsageError("zero denominator in '" + text + "'");
    }
    q.canonicalize();
    Scalar s(field);
    s.rational_ = q;
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? residue_ == 0 : rational_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? residue_ == 1 % field_.modulus() : rational_ == 1;
}

void Scalar::require_same_field(const Scalar& other) const {
    if (field_ != other.field_) {
        throw UsageError("scalar field mismatch: " + field_.name() + " vs " + other.field_.name());
    }
}

Scalar Scalar::operator+(const Scalar& other) const {
    require_same_field(other);
    Scalar s(field_);
    if (field_.is_prime_field()) {
        s.residue_ = (residue_ + other.residue_) % field_.modulus();
    } else {
        s.rational_ = rational_ + other.rational_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
    require_same_field(other);
    Scalar s(field_);
    if (field_.is_prime_field()) {
        s.residue_ = residue_ * other.residue_ % field_.modulus();
    } else {
        s.rational_ = rational_ * other.rational_;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& other) const { return *this * other.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_prime_field()) {
        s.residue_ = residue_ == 0 ? 0 : field_.modulus() - residue_;
    } else {
        s.rational_ = -rational_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw UsageError("division by zero");
    Scalar s(field_);
    if (field_.is_prime_field()) {
        s.residue_ = mod_pow(residue_, field_.modulus() - 2, field_.modulus());
    } else {
        s.rational_ = 1 / rational_;
    }
    return s;
}

bool Scalar::operator==(const Scalar& other) const {
    if (field_ != other.field_) return false;
    return field_.is_prime_field() ? residue_ == other.residue_ : rational_ == other.rational_;
}

std::string Scalar::str() const {
    if (field_.is_prime_field()) return std::to_string(residue_);
    return rational_.get_str();
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw UsageError("residue() called on a rational scalar");
    return residue_;
}

const mpq_class& Scalar::rational() const {
    if (field_.is_prime_field()) throw UsageError("rational() called on a prime-field scalar");
    return rational_;
}

}  // namespace lcadual
