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

#include "eukleia/angle.hpp"

#include <sstream>

namespace eukleia {

namespace {

void reduce(BigInt& x, BigInt& y) {
    BigInt g = gcd(abs(x), abs(y));
    if (g > 1) {
        x /= g;
        y /= g;
    }
}

// Position of the direction on the circle, counter-clockwise from the
// positive x-axis: even ranks are axis directions, odd ranks open quadrants.
int rank(const PlaneVector& v) {
    int sx = v.x().sign(), sy = v.y().sign();
    if (sy == 0) return sx > 0 ? 0 : 4;
    if (sx == 0) return sy > 0 ? 2 : 6;
    if (sy > 0) return sx > 0 ? 1 : 3;
    return sx < 0 ? 5 : 7;
}

}  // namespace

const char* to_string(Ordering3 o) {
    switch (o) {
        case Ordering3::Less: return "LESS";
        case Ordering3::Equal: return "EQUAL";
        case Ordering3::Greater: return "GREATER";
    }
    return "?";
}

PlaneVector PlaneVector::make(BigInt x, BigInt y) {
    if (x == 0 && y == 0) throw DegenerateAngle("zero vector has no direction");
    reduce(x, y);
    return PlaneVector(std::move(x), std::move(y));
}

PlaneVector PlaneVector::rotated_by(const PlaneVector& o) const {
    return make(x_ * o.x_ - y_ * o.y_, x_ * o.y_ + y_ * o.x_);
}

AngleLit AngleLit::from_slope_vector(BigInt x, BigInt y) {
    if (y <= 0) {
        throw DegenerateAngle("ang(" + x.str() + "/" + y.str() +
                              ") is not strictly between 0 and pi");
    }
    reduce(x, y);
    return AngleLit(std::move(x), std::move(y));
}

bool structural_less(const AngleLit& a, const AngleLit& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    return a.y() < b.y();
}

AngleLit angle_from_slope_vector(BigInt x, BigInt y) {
    return AngleLit::from_slope_vector(std::move(x), std::move(y));
}

AngleLit angle_from_rays(const RationalPoint& apex, const RationalPoint& p,
                         const RationalPoint& q) {
    BigRational ux = p.x - apex.x, uy = p.y - apex.y;
    BigRational vx = q.x - apex.x, vy = q.y - apex.y;
    if ((ux == 0 && uy == 0) || (vx == 0 && vy == 0)) {
        throw DegenerateAngle("ray endpoint coincides with the apex");
    }
    BigRational dot = ux * vx + uy * vy;
    BigRational cross = ux * vy - uy * vx;
    if (cross == 0) throw DegenerateAngle("rays are collinear");
    if (cross < 0) cross = -cross;
    // Clear denominators with the same positive factor on both coordinates.
    BigInt x = numerator(dot) * denominator(cross);
    BigInt y = numerator(cross) * denominator(dot);
    return AngleLit::from_slope_vector(std::move(x), std::move(y));
}

Ordering3 compare_args(const PlaneVector& a, const PlaneVector& b) {
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb ? Ordering3::Less : Ordering3::Greater;
    if (ra % 2 == 0) return Ordering3::Equal;
    BigInt cross = a.x() * b.y() - a.y() * b.x();
    if (cross > 0) return Ordering3::Less;
    if (cross < 0) return Ordering3::Greater;
    return Ordering3::Equal;
}

AngleSum sum_multiset(std::span<const AngleLit> angles) {
    AngleSum acc;
    for (const AngleLit& a : angles) {
        PlaneVector next = acc.rep.rotated_by(a.vector());
        // Each step adds less than pi, so the argument dropped iff we wrapped.
        if (compare_args(next, acc.rep) == Ordering3::Less) ++acc.windings;
        acc.rep = std::move(next);
    }
    return acc;
}

Ordering3 compare_sums(const AngleSum& a, const AngleSum& b) {
    if (a.windings != b.windings) {
        return a.windings < b.windings ? Ordering3::Less : Ordering3::Greater;
    }
    return compare_args(a.rep, b.rep);
}

Ordering3 compare_multisets(std::span<const AngleLit> a,
                            std::span<const AngleLit> b) {
    return compare_sums(sum_multiset(a), sum_multiset(b));
}

AngleLit add_two(const AngleLit& b, const AngleLit& c) {
    BigInt x = b.x() * c.x() - b.y() * c.y();
    BigInt y = b.x() * c.y() + b.y() * c.x();
    // Both summands lie in (0, pi), so y <= 0 means the sum reached pi.
    if (y <= 0) {
        throw AngleOverflow(to_string(b) + " + " + to_string(c) +
                            " is not less than two right angles");
    }
    return AngleLit::from_slope_vector(std::move(x), std::move(y));
}

std::string to_string(const AngleLit& a) {
    return "ang(" + a.x().str() + "/" + a.y().str() + ")";
}

std::string to_string(const PlaneVector& v) {
    return "(" + v.x().str() + "," + v.y().str() + ")";
}

std::string to_string(const AngleSum& s) {
    return "turns=" + std::to_string(s.windings) + ", rep=" + to_string(s.rep);
}

std::string to_string(std::span<const AngleLit> m) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ", ";
        os << to_string(m[i]);
    }
    os << '}';
    return os.str();
}

}  // namespace eukleia
