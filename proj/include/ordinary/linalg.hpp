#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "ordinary/rational.hpp"

namespace ordinary {

// Fixed-dimension exact vector.
template <std::size_t N>
struct Vec {
    std::array<Rat, N> c{};

    Rat& operator[](std::size_t i) { return c[i]; }
    const Rat& operator[](std::size_t i) const { return c[i]; }

    friend Vec operator+(const Vec& a, const Vec& b) {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Vec operator*(const Rat& s, const Vec& v) {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = s * v.c[i];
        return r;
    }
    friend bool operator==(const Vec& a, const Vec& b) { return a.c == b.c; }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
};

template <std::size_t N>
Rat dot(const Vec<N>& a, const Vec<N>& b) {
    Rat s;
    for (std::size_t i = 0; i < N; ++i) s += a.c[i] * b.c[i];
    return s;
}

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;
using Vec5 = Vec<5>;
using Vec6 = Vec<6>;

inline Rat cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return Vec3{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                 a[0] * b[1] - a[1] * b[0]}};
}

// Small dense exact matrix. The shape is fixed at construction; all
// elimination is plain Gauss over the rationals (canonical form keeps
// intermediate entries reduced).
class Mat {
public:
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols)) {}
    explicit Mat(std::vector<std::vector<Rat>> rows);

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r][c]; }
    const std::vector<Rat>& row(std::size_t r) const { return a_[r]; }

    Mat transposed() const;

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Rat>> a_;
};

std::size_t rank(const Mat& m);
Rat det(const Mat& m);  // throws std::invalid_argument unless square

// Exact solution of m x = b for square m; nullopt when m is singular
// (a value, not a failure).
std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b);

// Basis of the right kernel {x : m x = 0}; size is cols - rank.
std::vector<std::vector<Rat>> kernel_basis(const Mat& m);

// Least-structure solve of an overdetermined but consistent system
// m x = b (rows >= cols, rank == cols). Returns nullopt if inconsistent
// or rank-deficient.
std::optional<std::vector<Rat>> solve_consistent(const Mat& m, const std::vector<Rat>& b);

// Clears denominators and common factors so that the coefficients are
// coprime integers whose first nonzero entry is positive. All-zero input
// is returned unchanged.
std::vector<Rat> normalize_coefficients(std::vector<Rat> coeffs);

}  // namespace ordinary
