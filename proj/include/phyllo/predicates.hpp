#pragma once

#include "phyllo/geometry.hpp"

namespace phyllo::predicates {

// Signs are exact: a floating-point filter decides the easy cases and the
// rest are recomputed in rational arithmetic.

// > 0 when c lies to the left of the directed line a -> b.
int orient2d(Vec2 a, Vec2 b, Vec2 c);

// > 0 when d lies strictly inside the circle through a, b, c given
// counter-clockwise.
int incircle(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// > 0 when d lies on the side of the plane (a, b, c) that the normal
// (b - a) x (c - a) points to.
int orient3d(Vec3 a, Vec3 b, Vec3 c, Vec3 d);

// Number of times the exact fallback ran in this thread (diagnostics).
long exact_fallbacks();

}  // namespace phyllo::predicates
