#include "ordinary/ordinary_line.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "ordinary/errors.hpp"

namespace ordinary {

namespace {

// Pairwise parallel checks are skipped above this size; the constructed
// direction still guarantees a positive crossing and an empty ray line.
constexpr std::size_t kParallelCheckLimit = 1500;

Vec2 primitive_direction(const Point2& from, const Point2& to) {
    Rat dx = to.x - from.x;
    Rat dy = to.y - from.y;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), dx.den().get_mpz_t(), dy.den().get_mpz_t());
    mpz_class ix = dx.num() * (l / dx.den());
    mpz_class iy = dy.num() * (l / dy.den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
    return Vec2{{Rat(ix / g), Rat(iy / g)}};
}

struct PolarPoint {
    std::size_t index;  // index into s
    Vec2 dir;           // primitive direction from p0
    Rat dist2;
};

// S \ {p0} grouped into rays around p0, sorted by polar angle and, within
// a ray, by increasing distance.
std::vector<std::vector<PolarPoint>> polar_rays(const PointSet2& s, const Point2& p0,
                                                std::size_t p0_index) {
    std::vector<PolarPoint> pts;
    pts.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == p0_index) continue;
        Vec2 d = primitive_direction(p0, s[i]);
        Rat dx = s[i].x - p0.x, dy = s[i].y - p0.y;
        pts.push_back({i, d, dx * dx + dy * dy});
    }
    std::sort(pts.begin(), pts.end(), [](const PolarPoint& a, const PolarPoint& b) {
        int c = cross(a.dir, b.dir).sign();
        if (c != 0) return c > 0;
        return a.dist2 < b.dist2;
    });
    std::vector<std::vector<PolarPoint>> rays;
    for (auto& p : pts) {
        if (rays.empty() || !(rays.back().front().dir == p.dir))
            rays.emplace_back();
        rays.back().push_back(std::move(p));
    }
    return rays;
}

// Crossing parameter of line(u, w) with the ray p0 + lambda * dir, or
// nullopt when the line is parallel to the ray.
std::optional<Rat> crossing_lambda(const Point2& p0, const Vec2& dir, const Point2& u,
                                   const Point2& w) {
    Vec2 e{{w.x - u.x, w.y - u.y}};
    Rat denom = cross(dir, e);
    if (denom.is_zero()) return std::nullopt;
    Vec2 b{{u.x - p0.x, u.y - p0.y}};
    return cross(b, e) / denom;
}

struct Best {
    std::optional<Rat> lambda;
    std::pair<std::size_t, std::size_t> pair;

    void offer(const Rat& l, std::size_t i, std::size_t j) {
        auto p = std::minmax(i, j);
        if (!lambda || l < *lambda || (l == *lambda && p < pair)) {
            lambda = l;
            pair = p;
        }
    }
};

bool parallel_to_some_connecting_line(const PointSet2& s, std::size_t p0_index,
                                      const Vec2& dir) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == p0_index) continue;
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (j == p0_index) continue;
            Vec2 e{{s[j].x - s[i].x, s[j].y - s[i].y}};
            if (cross(dir, e).is_zero()) return true;
        }
    }
    return false;
}

}  // namespace

BaseRay choose_base_and_direction(const PointSet2& s) {
    if (are_collinear_all(s))
        throw DegenerateInput(DegenerateReason::collinear,
                              "cannot choose a base ray: points are collinear");
    std::size_t p0_index = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] < s[p0_index]) p0_index = i;
    const Point2& p0 = s[p0_index];

    auto rays = polar_rays(s, p0, p0_index);
    // Non-collinear input guarantees at least two distinct directions.
    const Vec2& d1 = rays[0].front().dir;
    const Vec2& d2 = rays[1].front().dir;

    // Any positive combination of d1 and d2 points strictly between the
    // first two rays: no set point lies on its line, and the segment
    // joining the two nearest points on those rays is crossed at a
    // positive parameter.
    Vec2 dir = d1 + d2;
    std::size_t n = s.size();
    if (n <= kParallelCheckLimit) {
        for (mpz_class k = 2; parallel_to_some_connecting_line(s, p0_index, dir); ++k)
            dir = Rat(k) * d1 + d2;
    }
    return BaseRay{p0, p0_index, dir};
}

bool verify_base_ray(const PointSet2& s, const BaseRay& ray) {
    if (ray.p0_index >= s.size() || !(s[ray.p0_index] == ray.p0)) return false;
    if (ray.dir.is_zero()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == ray.p0_index) continue;
        Vec2 d{{s[i].x - ray.p0.x, s[i].y - ray.p0.y}};
        if (cross(ray.dir, d).is_zero()) return false;  // point on the ray line
    }
    if (parallel_to_some_connecting_line(s, ray.p0_index, ray.dir)) return false;
    bool positive_crossing = false;
    for (std::size_t i = 0; i < s.size() && !positive_crossing; ++i) {
        if (i == ray.p0_index) continue;
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (j == ray.p0_index) continue;
            if (orientation(ray.p0, s[i], s[j]) == 0) continue;
            auto l = crossing_lambda(ray.p0, ray.dir, s[i], s[j]);
            if (l && l->sign() > 0) {
                positive_crossing = true;
                break;
            }
        }
    }
    return positive_crossing;
}

MinLambdaLine min_lambda_line_bruteforce(const PointSet2& s, const BaseRay& ray) {
    Best best;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == ray.p0_index) continue;
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (j == ray.p0_index) continue;
            if (orientation(ray.p0, s[i], s[j]) == 0) continue;  // line hits p0
            auto l = crossing_lambda(ray.p0, ray.dir, s[i], s[j]);
            if (l && l->sign() > 0) best.offer(*l, i, j);
        }
    }
    if (!best.lambda)
        throw InvariantViolation("min_lambda_line_bruteforce: no positive crossing");
    return {line_through(s[best.pair.first], s[best.pair.second]), *best.lambda, best.pair};
}

MinLambdaLine min_lambda_line_fast(const PointSet2& s, const BaseRay& ray) {
    auto rays = polar_rays(s, ray.p0, ray.p0_index);
    const std::size_t m = rays.size();
    if (m < 2) throw InvariantViolation("min_lambda_line_fast: all points on one ray");

    // In the dual arrangement around p0, the crossing with maximal ray
    // functional is a convex-hull vertex, and hull vertices only arise
    // from nearest/farthest points of two cyclically adjacent rays.
    Best best;
    const std::size_t pairs = (m == 2) ? 1 : m;
    for (std::size_t t = 0; t < pairs; ++t) {
        const auto& ra = rays[t];
        const auto& rb = rays[(t + 1) % m];
        const PolarPoint* as[2] = {&ra.front(), &ra.back()};
        const PolarPoint* bs[2] = {&rb.front(), &rb.back()};
        for (int ai = 0; ai < (ra.size() > 1 ? 2 : 1); ++ai) {
            for (int bi = 0; bi < (rb.size() > 1 ? 2 : 1); ++bi) {
                std::size_t i = as[ai]->index, j = bs[bi]->index;
                auto l = crossing_lambda(ray.p0, ray.dir, s[i], s[j]);
                if (l && l->sign() > 0) best.offer(*l, i, j);
            }
        }
    }
    if (!best.lambda) throw InvariantViolation("min_lambda_line_fast: no positive crossing");
    return {line_through(s[best.pair.first], s[best.pair.second]), *best.lambda, best.pair};
}

OrdinaryLineResult find_ordinary_line(const PointSet2& s, Engine engine) {
    if (s.size() < 2)
        throw DegenerateInput(DegenerateReason::collinear,
                              "need at least two points to span a line");
    if (s.size() == 2)
        return {line_through(s[0], s[1]), {s[0], s[1]}, {0, 1}};
    if (are_collinear_all(s))
        throw DegenerateInput(DegenerateReason::collinear, "all points are collinear");

    BaseRay ray = choose_base_and_direction(s);
    MinLambdaLine ml = engine == Engine::fast ? min_lambda_line_fast(s, ray)
                                              : min_lambda_line_bruteforce(s, ray);

    Incidence inc = incidence_count_line(s, ml.line);
    if (inc.count == 2)
        return {ml.line, {inc.witnesses[0], inc.witnesses[1]}, {inc.indices[0], inc.indices[1]}};

    // The first-crossed line carries three or more points; one of the lines
    // joining p0 to a point of it must be ordinary.
    for (std::size_t k = 0; k < inc.witnesses.size(); ++k) {
        Line2 cand = line_through(ray.p0, inc.witnesses[k]);
        Incidence ci = incidence_count_line(s, cand);
        if (ci.count == 2)
            return {cand, {ci.witnesses[0], ci.witnesses[1]}, {ci.indices[0], ci.indices[1]}};
    }
    throw InvariantViolation("find_ordinary_line: no candidate line is ordinary");
}

}  // namespace ordinary
