#include "skewcat/field.hpp"

namespace skewcat {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("not invertible modulo " + std::to_string(p));
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime(p)) throw Error("characteristic must be prime, got " + std::to_string(p));
    if (p >= (std::uint64_t{1} << 31)) throw Error("prime too large");
    return FieldSpec{Kind::prime_field, p};
}

std::string FieldSpec::str() const {
    if (kind == Kind::rationals) return "QQ";
    return "GF(" + std::to_string(characteristic) + ")";
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long long n) {
    Scalar s(f);
    if (f.kind == FieldSpec::Kind::rationals) {
        s.q_ = BigRational(n);
    } else {
        long long p = static_cast<long long>(f.characteristic);
        long long r = n % p;
        if (r < 0) r += p;
        s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_rational(BigRational q) {
    Scalar s(FieldSpec::rationals());
    s.q_ = std::move(q);
    return s;
}

Scalar Scalar::from_residue(const FieldSpec& f, std::uint64_t r) {
    if (f.kind != FieldSpec::Kind::prime_field) throw Error("from_residue requires a prime field");
    Scalar s(f);
    s.r_ = r % f.characteristic;
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    std::string t(text);
    if (f.kind == FieldSpec::Kind::rationals) {
        auto slash = t.find('/');
        try {
            if (slash == std::string::npos) return from_rational(BigRational(BigInt(t)));
            BigInt num(t.substr(0, slash));
            BigInt den(t.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in '" + t + "'");
            return from_rational(BigRational(num, den));
        } catch (const std::runtime_error& e) {
            throw ParseError("bad rational '" + t + "': " + e.what());
        }
    }
    std::uint64_t v = 0;
    for (char c : t) {
        if (c < '0' || c > '9') throw ParseError("bad residue '" + t + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v >= (std::uint64_t{1} << 62)) throw ParseError("residue overflow in '" + t + "'");
    }
    if (v >= f.characteristic) throw ParseError("residue " + t + " out of range for " + f.str());
    return from_residue(f, v);
}

bool Scalar::is_zero() const {
    return field_.kind == FieldSpec::Kind::rationals ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldSpec::Kind::rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("scalar fields differ: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.kind == FieldSpec::Kind::rationals)
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % field_.characteristic;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.kind == FieldSpec::Kind::rationals)
        s.q_ = q_ - o.q_;
    else
        s.r_ = (r_ + field_.characteristic - o.r_) % field_.characteristic;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.kind == FieldSpec::Kind::rationals)
        s.q_ = q_ * o.q_;
    else
        s.r_ = (r_ * o.r_) % field_.characteristic;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.kind == FieldSpec::Kind::rationals)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.characteristic - r_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero in " + field_.str());
    Scalar s(field_);
    if (field_.kind == FieldSpec::Kind::rationals)
        s.q_ = 1 / q_;
    else
        s.r_ = mod_inverse(r_, field_.characteristic);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.kind == FieldSpec::Kind::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldSpec::Kind::prime_field) return std::to_string(r_);
    BigInt num = numerator(q_), den = denominator(q_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace skewcat
