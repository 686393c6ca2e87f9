/*
   Copyright 2026 The hopfneb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hopfneb/scalar.hpp"

#include <ostream>

#include "hopfneb/errors.hpp"

namespace hopfneb {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::OwnerMismatch: return "OwnerMismatch";
        case ErrorCode::FactorMismatch: return "FactorMismatch";
        case ErrorCode::MissingGeneratorImage: return "MissingGeneratorImage";
        case ErrorCode::InfiniteBasis: return "InfiniteBasis";
        case ErrorCode::InvalidTable: return "InvalidTable";
        case ErrorCode::InvalidGroupTable: return "InvalidGroupTable";
        case ErrorCode::NoAntipode: return "NoAntipode";
        case ErrorCode::NotCommutative: return "NotCommutative";
        case ErrorCode::NoCertifiedInverse: return "NoCertifiedInverse";
        case ErrorCode::BoundTooSmall: return "BoundTooSmall";
        case ErrorCode::DegreeExceedsBound: return "DegreeExceedsBound";
        case ErrorCode::UnknownScenario: return "UnknownScenario";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

Field Field::prime(std::uint32_t p) {
    if (p < 2) throw Error(ErrorCode::InvalidArgument, "field characteristic must be prime");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0)
            throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    return Field(p);
}

std::string Field::to_string() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar::Scalar(long n, Field f) : value_(n), field_(f) { normalize(); }

Scalar::Scalar(const mpq_class& q, Field f) : value_(q), field_(f) { normalize(); }

void Scalar::normalize() {
    if (field_.is_rational()) {
        value_.canonicalize();
        return;
    }
    // Map n/d to n * d^{-1} mod p.
    const mpz_class p(field_.characteristic());
    mpz_class num = value_.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = value_.get_den() % p;
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "denominator divisible by p");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    value_ = mpq_class(r);
}

void Scalar::require_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.value_ = -r.value_;
    r.normalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    value_ += o.value_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_field(o);
    value_ -= o.value_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(o);
    value_ *= o.value_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    if (field_.is_rational()) return Scalar(1 / value_, field_);
    mpz_class inv;
    const mpz_class p(field_.characteristic());
    mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
    return Scalar(mpq_class(inv), field_);
}

Scalar Scalar::parse(std::string_view text, Field f) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty scalar");
    if (s.front() == '+') s.erase(0, 1);
    auto valid = [](const std::string& part) {
        std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-')
        throw Error(ErrorCode::InvalidArgument, "malformed scalar '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + s + "'");
    return Scalar(mpq_class(n, d), f);
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hopfneb
