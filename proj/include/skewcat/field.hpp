#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skewcat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatchError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidComplexError : public Error {
public:
    using Error::Error;
};

class NotAGroupError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/* The ground field: the rationals or a prime field F_p. */
struct FieldSpec {
    enum class Kind { rationals, prime_field };

    Kind kind = Kind::rationals;
    std::uint64_t characteristic = 0;  // 0 for Q, p otherwise

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
    static FieldSpec prime(std::uint64_t p);  // throws unless p is prime (and < 2^31)

    bool operator==(const FieldSpec&) const = default;

    std::string str() const;
};

/* An exact field element. Rationals are kept reduced with positive
 * denominator; prime-field elements as the representative in [0, p). */
class Scalar {
public:
    static Scalar zero(const FieldSpec& f) { return Scalar(f); }
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long long n);
    static Scalar from_rational(BigRational q);  // field = rationals
    static Scalar from_residue(const FieldSpec& f, std::uint64_t r);

    // "a/b" or "a" for Q; decimal representative for F_p
    static Scalar parse(const FieldSpec& f, std::string_view text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws Error on division by zero
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

    const BigRational& rational() const { return q_; }  // only meaningful over Q
    std::uint64_t residue() const { return r_; }        // only meaningful over F_p

private:
    explicit Scalar(const FieldSpec& f) : field_(f) {}

    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    BigRational q_;
    std::uint64_t r_ = 0;
};

}  // namespace skewcat
