#include "mink/lorentz.hpp"

#include <algorithm>
#include <cmath>

#include "mink/errors.hpp"

namespace mink {

LVec3 operator+(const LVec3& a, const LVec3& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

LVec3 operator-(const LVec3& a, const LVec3& b) {
    return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

LVec3 operator-(const LVec3& a) { return {-a.x1, -a.x2, -a.x3}; }

LVec3 operator*(double s, const LVec3& a) {
    return {s * a.x1, s * a.x2, s * a.x3};
}

LVec3 operator*(const LVec3& a, double s) { return s * a; }

LVec3 operator/(const LVec3& a, double s) {
    return {a.x1 / s, a.x2 / s, a.x3 / s};
}

LVec3& operator+=(LVec3& a, const LVec3& b) {
    a.x1 += b.x1;
    a.x2 += b.x2;
    a.x3 += b.x3;
    return a;
}

LVec3& operator-=(LVec3& a, const LVec3& b) {
    a.x1 -= b.x1;
    a.x2 -= b.x2;
    a.x3 -= b.x3;
    return a;
}

double minkowski_inner(const LVec3& a, const LVec3& b) {
    return -a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

double lorentz_norm(const LVec3& a) {
    return std::sqrt(std::fabs(minkowski_inner(a, a)));
}

double euclidean_norm(const LVec3& a) {
    return std::sqrt(a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3);
}

CausalCharacter causal_character(const LVec3& a, double tol) {
    const double q = minkowski_inner(a, a);
    if (q > tol) return CausalCharacter::Spacelike;
    if (q < -tol) return CausalCharacter::Timelike;
    const bool zero = a.x1 == 0.0 && a.x2 == 0.0 && a.x3 == 0.0;
    return zero ? CausalCharacter::Spacelike : CausalCharacter::Lightlike;
}

LVec3 lorentz_cross(const LVec3& a, const LVec3& b) {
    return {a.x2 * b.x3 - a.x3 * b.x2,
            a.x1 * b.x3 - a.x3 * b.x1,
            a.x2 * b.x1 - a.x1 * b.x2};
}

namespace {

bool is_zero(const LVec3& a) {
    return a.x1 == 0.0 && a.x2 == 0.0 && a.x3 == 0.0;
}

} // namespace

LorentzAngle lorentz_angle(const LVec3& x, const LVec3& y, double tol) {
    if (is_zero(x) || is_zero(y)) {
        throw DomainError("lorentz_angle: angle undefined for the zero vector");
    }
    const CausalCharacter cx = causal_character(x, tol);
    const CausalCharacter cy = causal_character(y, tol);
    if (cx == CausalCharacter::Lightlike || cy == CausalCharacter::Lightlike) {
        throw DomainError("lorentz_angle: angle undefined for lightlike vectors");
    }

    const double ip = minkowski_inner(x, y);
    const double nx = lorentz_norm(x);
    const double ny = lorentz_norm(y);
    const double ratio = ip / (nx * ny);

    if (cx == CausalCharacter::Spacelike && cy == CausalCharacter::Spacelike) {
        // Gram determinant of the span decides the plane's causal type.
        const double gram = minkowski_inner(x, x) * minkowski_inner(y, y) - ip * ip;
        if (gram > tol) {
            const double c = std::clamp(ratio, -1.0, 1.0);
            return {std::acos(c), AngleKind::SpacelikePlane};
        }
        if (gram < -tol) {
            const double c = std::max(std::fabs(ratio), 1.0);
            return {std::acosh(c), AngleKind::TimelikePlane};
        }
        throw DomainError(
            "lorentz_angle: spacelike vectors span a degenerate (lightlike) "
            "plane; no angle is defined");
    }

    if (cx == CausalCharacter::Timelike && cy == CausalCharacter::Timelike) {
        if (x.x1 * y.x1 <= 0.0) {
            throw DomainError(
                "lorentz_angle: timelike vectors have opposite time "
                "orientation; no angle is defined");
        }
        const double c = std::max(std::fabs(ratio), 1.0);
        return {std::acosh(c), AngleKind::TimelikeTimelike};
    }

    // Mixed pair: one spacelike, one timelike; either orientation accepted.
    return {std::asinh(std::fabs(ratio)), AngleKind::SpacelikeTimelike};
}

std::string to_string(CausalCharacter c) {
    switch (c) {
        case CausalCharacter::Spacelike: return "spacelike";
        case CausalCharacter::Timelike: return "timelike";
        case CausalCharacter::Lightlike: return "lightlike";
    }
    return "unknown";
}

std::string to_string(AngleKind k) {
    switch (k) {
        case AngleKind::SpacelikePlane: return "spacelike-plane";
        case AngleKind::TimelikePlane: return "timelike-plane";
        case AngleKind::SpacelikeTimelike: return "spacelike-timelike";
        case AngleKind::TimelikeTimelike: return "timelike-timelike";
    }
    return "unknown";
}

} // namespace mink
