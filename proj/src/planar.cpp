#include "ordinary/planar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ordinary/errors.hpp"

namespace ordinary {

namespace {

std::array<Rat, 3> normalize3(Rat a, Rat b, Rat c) {
    auto v = normalize_coefficients({std::move(a), std::move(b), std::move(c)});
    return {v[0], v[1], v[2]};
}

std::vector<Rat> lifted_row(const Point2& p) {
    return {p.x * p.x, p.y * p.y, p.x * p.y, p.x, p.y, Rat(1)};
}

}  // namespace

Line2::Line2(Rat a, Rat b, Rat c) : c_(normalize3(std::move(a), std::move(b), std::move(c))) {
    if (c_[0].is_zero() && c_[1].is_zero())
        throw std::invalid_argument("Line2: (a, b) must not both be zero");
}

Conic::Conic(Rat a, Rat b, Rat c, Rat d, Rat e, Rat f) {
    auto v = normalize_coefficients(
        {std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), std::move(f)});
    bool all_zero = true;
    for (const auto& x : v) all_zero = all_zero && x.is_zero();
    if (all_zero) throw std::invalid_argument("Conic: all coefficients zero");
    std::copy(v.begin(), v.end(), c_.begin());
}

bool Conic::degenerate() const {
    // Symmetric matrix of the homogeneous quadric:
    //   [ a   c/2 d/2 ]
    //   [ c/2 b   e/2 ]
    //   [ d/2 e/2 f   ]
    const Rat &a = c_[0], &b = c_[1], &c = c_[2], &d = c_[3], &e = c_[4], &f = c_[5];
    Rat half(1, 2);
    Mat m({{a, half * c, half * d}, {half * c, b, half * e}, {half * d, half * e, f}});
    return det(m).is_zero();
}

PointSet2::PointSet2(std::vector<Point2> points) : pts_(std::move(points)) {
    std::vector<std::size_t> order(pts_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return pts_[i] < pts_[j]; });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (pts_[order[k - 1]] == pts_[order[k]])
            throw std::invalid_argument("PointSet2: duplicate point at indices " +
                                        std::to_string(order[k - 1]) + " and " +
                                        std::to_string(order[k]));
    }
}

std::optional<std::size_t> PointSet2::index_of(const Point2& p) const {
    for (std::size_t i = 0; i < pts_.size(); ++i)
        if (pts_[i] == p) return i;
    return std::nullopt;
}

int orientation(const Point2& p, const Point2& q, const Point2& r) {
    Rat d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return d.sign();
}

Line2 line_through(const Point2& p, const Point2& q) {
    if (p == q) throw std::invalid_argument("line_through: points coincide");
    return Line2(q.y - p.y, p.x - q.x, q.x * p.y - p.x * q.y);
}

Incidence incidence_count_line(const PointSet2& s, const Line2& l) {
    Incidence inc;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (l.contains(s[i])) {
            ++inc.count;
            inc.witnesses.push_back(s[i]);
            inc.indices.push_back(i);
        }
    }
    return inc;
}

Incidence incidence_count_conic(const PointSet2& s, const Conic& c) {
    Incidence inc;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (c.contains(s[i])) {
            ++inc.count;
            inc.witnesses.push_back(s[i]);
            inc.indices.push_back(i);
        }
    }
    return inc;
}

std::optional<Conic> conic_through_five(const std::array<Point2, 5>& pts) {
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            if (pts[i] == pts[j])
                throw std::invalid_argument("conic_through_five: points not pairwise distinct");
    std::vector<std::vector<Rat>> rows;
    rows.reserve(5);
    for (const auto& p : pts) rows.push_back(lifted_row(p));
    auto basis = kernel_basis(Mat(std::move(rows)));
    if (basis.size() != 1) return std::nullopt;  // pencil: under-determined
    const auto& v = basis[0];
    return Conic(v[0], v[1], v[2], v[3], v[4], v[5]);
}

bool point_on_conic(const Conic& c, const Point2& p) { return c.contains(p); }

bool are_collinear_all(const PointSet2& s) {
    if (s.size() <= 2) return true;
    for (std::size_t i = 2; i < s.size(); ++i)
        if (orientation(s[0], s[1], s[i]) != 0) return false;
    return true;
}

bool are_coconic_all(const PointSet2& s) {
    if (s.size() <= 5) return true;
    std::vector<std::vector<Rat>> rows;
    rows.reserve(s.size());
    for (const auto& p : s) rows.push_back(lifted_row(p));
    return rank(Mat(std::move(rows))) <= 5;
}

}  // namespace ordinary
