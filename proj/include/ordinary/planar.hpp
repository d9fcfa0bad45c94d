#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ordinary/linalg.hpp"
#include "ordinary/rational.hpp"

namespace ordinary {

struct Point2 {
    Rat x, y;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    friend bool operator<(const Point2& a, const Point2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Line a x + b y + c = 0 with (a, b) != (0, 0). Coefficients are kept as
// coprime integers with the first nonzero one positive, so equal lines
// compare equal structurally.
class Line2 {
public:
    Line2(Rat a, Rat b, Rat c);

    const Rat& a() const { return c_[0]; }
    const Rat& b() const { return c_[1]; }
    const Rat& c() const { return c_[2]; }
    const std::array<Rat, 3>& coeffs() const { return c_; }

    Rat eval(const Point2& p) const { return c_[0] * p.x + c_[1] * p.y + c_[2]; }
    bool contains(const Point2& p) const { return eval(p).is_zero(); }

    friend bool operator==(const Line2& l, const Line2& m) { return l.c_ == m.c_; }
    friend bool operator<(const Line2& l, const Line2& m) { return l.c_ < m.c_; }

private:
    std::array<Rat, 3> c_;
};

// Conic a x^2 + b y^2 + c xy + d x + e y + f = 0, normalized like Line2.
// Degenerate conics (line pairs) are legal values; degeneracy is metadata.
class Conic {
public:
    Conic(Rat a, Rat b, Rat c, Rat d, Rat e, Rat f);

    const std::array<Rat, 6>& coeffs() const { return c_; }

    Rat eval(const Point2& p) const {
        return c_[0] * p.x * p.x + c_[1] * p.y * p.y + c_[2] * p.x * p.y + c_[3] * p.x +
               c_[4] * p.y + c_[5];
    }
    bool contains(const Point2& p) const { return eval(p).is_zero(); }

    // True when the associated quadratic form is singular (e.g. a line pair).
    bool degenerate() const;

    friend bool operator==(const Conic& l, const Conic& m) { return l.c_ == m.c_; }
    friend bool operator<(const Conic& l, const Conic& m) { return l.c_ < m.c_; }

private:
    std::array<Rat, 6> c_;
};

// Ordered list of pairwise-distinct points; order is preserved so the
// deterministic finders give reproducible answers.
class PointSet2 {
public:
    PointSet2() = default;
    explicit PointSet2(std::vector<Point2> points);

    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Point2& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Point2>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    std::optional<std::size_t> index_of(const Point2& p) const;

private:
    std::vector<Point2> pts_;
};

struct Incidence {
    std::size_t count = 0;
    std::vector<Point2> witnesses;  // incident points, in input order
    std::vector<std::size_t> indices;
};

// Sign of the signed area of triangle (p, q, r): +1 counterclockwise,
// -1 clockwise, 0 collinear.
int orientation(const Point2& p, const Point2& q, const Point2& r);

Line2 line_through(const Point2& p, const Point2& q);  // throws on p == q

Incidence incidence_count_line(const PointSet2& s, const Line2& l);
Incidence incidence_count_conic(const PointSet2& s, const Conic& c);

// Unique conic through five pairwise-distinct points, or nullopt when the
// 5x6 incidence system is rank-deficient (a pencil; no canonical pick).
std::optional<Conic> conic_through_five(const std::array<Point2, 5>& pts);

bool point_on_conic(const Conic& c, const Point2& p);

bool are_collinear_all(const PointSet2& s);  // true for |s| <= 2

// True iff the n x 6 matrix of lifted rows (x^2, y^2, xy, x, y, 1) has
// rank <= 5; always true for |s| <= 5.
bool are_coconic_all(const PointSet2& s);

}  // namespace ordinary
