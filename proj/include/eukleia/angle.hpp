/* Copyright 2026 The Eukleia Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef EUKLEIA_ANGLE_HPP
#define EUKLEIA_ANGLE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eukleia {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct DegenerateAngle : std::domain_error {
    using std::domain_error::domain_error;
};

struct AngleOverflow : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Ordering3 { Less, Equal, Greater };

inline Ordering3 reversed(Ordering3 o) {
    switch (o) {
        case Ordering3::Less: return Ordering3::Greater;
        case Ordering3::Greater: return Ordering3::Less;
        default: return Ordering3::Equal;
    }
}

const char* to_string(Ordering3 o);  // "LESS" | "EQUAL" | "GREATER"

/// Nonzero integer vector in lowest terms. Its argument lies in [0, 2*pi).
class PlaneVector {
public:
    /// Throws DegenerateAngle on the zero vector.
    static PlaneVector make(BigInt x, BigInt y);
    static PlaneVector unit() { return PlaneVector(1, 0); }

    const BigInt& x() const { return x_; }
    const BigInt& y() const { return y_; }

    /// Rotation composition: complex product, reduced.
    PlaneVector rotated_by(const PlaneVector& other) const;

    friend bool operator==(const PlaneVector&, const PlaneVector&) = default;

private:
    PlaneVector(BigInt x, BigInt y) : x_(std::move(x)), y_(std::move(y)) {}
    BigInt x_, y_;
};

/// A rectilinear angle strictly between 0 and pi, stored as the canonical
/// direction vector (x, y) with y > 0 and gcd(|x|, y) = 1. Two literals are
/// the same angle iff their canonical forms match.
class AngleLit {
public:
    /// Throws DegenerateAngle when y <= 0.
    static AngleLit from_slope_vector(BigInt x, BigInt y);
    static AngleLit right() { return AngleLit(0, 1); }

    const BigInt& x() const { return x_; }
    const BigInt& y() const { return y_; }
    PlaneVector vector() const { return PlaneVector::make(x_, y_); }

    friend bool operator==(const AngleLit&, const AngleLit&) = default;

private:
    AngleLit(BigInt x, BigInt y) : x_(std::move(x)), y_(std::move(y)) {}
    BigInt x_, y_;
};

/// Coordinate-wise order. Used only to keep multisets canonical; it has
/// nothing to do with angle size.
bool structural_less(const AngleLit& a, const AngleLit& b);

/// Total measure 2*pi*windings + arg(rep).
struct AngleSum {
    std::uint64_t windings = 0;
    PlaneVector rep = PlaneVector::unit();

    friend bool operator==(const AngleSum&, const AngleSum&) = default;
};

struct RationalPoint {
    BigRational x, y;
};

AngleLit angle_from_slope_vector(BigInt x, BigInt y);

/// The angle between rays apex->p and apex->q. Throws DegenerateAngle when
/// either ray is empty or the rays are collinear.
AngleLit angle_from_rays(const RationalPoint& apex, const RationalPoint& p,
                         const RationalPoint& q);

inline AngleLit right_angle() { return AngleLit::right(); }

Ordering3 compare_args(const PlaneVector& a, const PlaneVector& b);

AngleSum sum_multiset(std::span<const AngleLit> angles);

Ordering3 compare_sums(const AngleSum& a, const AngleSum& b);

Ordering3 compare_multisets(std::span<const AngleLit> a,
                            std::span<const AngleLit> b);

/// The single angle equal to {b, c}; throws AngleOverflow when b + c >= pi.
AngleLit add_two(const AngleLit& b, const AngleLit& c);

std::string to_string(const AngleLit& a);         // ang(x/y)
std::string to_string(const PlaneVector& v);      // (x,y)
std::string to_string(const AngleSum& s);         // turns=k, rep=(x,y)
std::string to_string(std::span<const AngleLit> m);  // {t1, t2, ...}

}  // namespace eukleia

#endif  // EUKLEIA_ANGLE_HPP
