#pragma once

#include <string>

namespace mink {

// Vector in 3-space carrying the index-one scalar product
//     <a, b> = -a.x1*b.x1 + a.x2*b.x2 + a.x3*b.x3,
// i.e. the first coordinate is the timelike direction.
struct LVec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
};

LVec3 operator+(const LVec3& a, const LVec3& b);
LVec3 operator-(const LVec3& a, const LVec3& b);
LVec3 operator-(const LVec3& a);
LVec3 operator*(double s, const LVec3& a);
LVec3 operator*(const LVec3& a, double s);
LVec3 operator/(const LVec3& a, double s);
LVec3& operator+=(LVec3& a, const LVec3& b);
LVec3& operator-=(LVec3& a, const LVec3& b);

// Default tolerance for deciding causal character of near-null vectors.
inline constexpr double kCausalTol = 1e-10;

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

// Scalar product of signature (-,+,+).
double minkowski_inner(const LVec3& a, const LVec3& b);

// sqrt(|<a,a>|).
double lorentz_norm(const LVec3& a);

// Ordinary Euclidean length, used for scale-relative comparisons.
double euclidean_norm(const LVec3& a);

// Causal character with tolerance: spacelike when <a,a> > tol or a == 0,
// timelike when <a,a> < -tol, lightlike otherwise (a != 0).
CausalCharacter causal_character(const LVec3& a, double tol = kCausalTol);

// Bilinear product adapted to the index-one metric. Satisfies
//     <a x b, c> = det(a; b; c)  (rows in that order)
// and the Lagrange identity <a x b, a x b> = <a,b>^2 - <a,a><b,b>.
// Components: (a2*b3 - a3*b2, a1*b3 - a3*b1, a2*b1 - a1*b2).
LVec3 lorentz_cross(const LVec3& a, const LVec3& b);

// Which of the four well-defined angle configurations applies.
enum class AngleKind {
    SpacelikePlane,    // both spacelike, spanning a spacelike plane
    TimelikePlane,     // both spacelike, spanning a timelike plane
    SpacelikeTimelike, // one spacelike, one timelike
    TimelikeTimelike   // both timelike, same time orientation
};

struct LorentzAngle {
    double value = 0.0;
    AngleKind kind = AngleKind::SpacelikePlane;
};

// Angle between two non-lightlike, nonzero vectors:
//   * both spacelike, Gram determinant > 0: cos(angle) = <x,y>/(|x||y|);
//   * both spacelike, Gram determinant < 0: cosh(angle) = |<x,y>|/(|x||y|);
//   * mixed characters: sinh(angle) = |<x,y>|/(|x||y|);
//   * both timelike with the same time orientation:
//     cosh(angle) = |<x,y>|/(|x||y|).
// Throws DomainError for lightlike or zero inputs, for spacelike pairs whose
// span degenerates (|Gram| <= tol), and for timelike pairs with opposite
// time orientation.
LorentzAngle lorentz_angle(const LVec3& x, const LVec3& y,
                           double tol = kCausalTol);

std::string to_string(CausalCharacter c);
std::string to_string(AngleKind k);

} // namespace mink
