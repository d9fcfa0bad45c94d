#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "ordinary/engine.hpp"
#include "ordinary/planar.hpp"

namespace ordinary {

// Directed probe ray from a point of the set. Invariants:
//   - p0 is a point of the set and no other point lies on the ray's line;
//   - at least one line through two points of S \ {p0} crosses the ray at
//     a positive parameter.
// For inputs small enough to check, the direction additionally avoids being
// parallel to any connecting line of S \ {p0} (see choose_base_and_direction).
struct BaseRay {
    Point2 p0;
    std::size_t p0_index = 0;
    Vec2 dir;  // primitive integer direction
};

struct MinLambdaLine {
    Line2 line;
    Rat lambda;                              // positive crossing parameter
    std::pair<std::size_t, std::size_t> witnesses;  // defining pair, indices into s
};

struct OrdinaryLineResult {
    Line2 line;
    std::array<Point2, 2> witnesses;
    std::array<std::size_t, 2> witness_indices;
};

// Deterministic ray choice: p0 is the lexicographically smallest point (a
// hull vertex, so every crossing of interest is at positive parameter) and
// the direction lies strictly between the first two distinct point
// directions around p0. For sets below an internal size threshold the
// direction is additionally adjusted until no connecting line of S \ {p0}
// is parallel to it. Throws DegenerateInput on collinear input.
BaseRay choose_base_and_direction(const PointSet2& s);

// Exhaustively checks all BaseRay invariants, including the quadratic-cost
// no-parallel-connecting-line condition. Intended for tests.
bool verify_base_ray(const PointSet2& s, const BaseRay& ray);

// Reference path: scan all lines through two points of S \ {p0} that avoid
// p0, keep the one crossing the ray at minimal positive lambda (ties by
// smallest witness indices).
MinLambdaLine min_lambda_line_bruteforce(const PointSet2& s, const BaseRay& ray);

// Same value contract as the brute-force path. Sorts S \ {p0} in polar
// order around p0, groups points by ray, and scans only the candidate
// lines spanned by nearest/farthest points of cyclically adjacent rays
// (the only pairs that can realize the minimum).
MinLambdaLine min_lambda_line_fast(const PointSet2& s, const BaseRay& ray);

// Line through exactly two points of a non-collinear set. The min-lambda
// line is ordinary or a line through p0 and one of its points is; every
// candidate is verified by an exact incidence recount. Throws
// DegenerateInput on collinear input, InvariantViolation if no candidate
// verifies (theoretically impossible).
OrdinaryLineResult find_ordinary_line(const PointSet2& s, Engine engine = Engine::fast);

}  // namespace ordinary
