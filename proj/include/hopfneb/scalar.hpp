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

#ifndef HOPFNEB_SCALAR_HPP
#define HOPFNEB_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hopfneb {

/// The exact base field: the rationals, or F_p for a prime p.
class Field {
   public:
    constexpr Field() noexcept = default;
    static constexpr Field rationals() noexcept { return Field(); }
    /// Throws InvalidArgument unless p is prime.
    static Field prime(std::uint32_t p);

    constexpr bool is_rational() const noexcept { return p_ == 0; }
    constexpr std::uint32_t characteristic() const noexcept { return p_; }
    std::string to_string() const;

    friend constexpr bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }

   private:
    constexpr explicit Field(std::uint32_t p) noexcept : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Exact scalar. Rationals are kept in lowest terms by GMP; F_p residues are
/// stored as integers in [0, p).
class Scalar {
   public:
    Scalar() = default;
    Scalar(long n, Field f = Field::rationals());
    Scalar(const mpq_class& q, Field f);

    /// Accepts "n", "-n", "n/d".
    static Scalar parse(std::string_view text, Field f);

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }
    const mpq_class& value() const noexcept { return value_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    Scalar inverse() const;
    std::string to_string() const;

   private:
    void normalize();
    void require_same_field(const Scalar& o) const;

    mpq_class value_{0};
    Field field_{};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfneb

#endif
