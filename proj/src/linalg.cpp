#include "ordinary/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ordinary {

Mat::Mat(std::vector<std::vector<Rat>> rows) : rows_(rows.size()), a_(std::move(rows)) {
    cols_ = rows_ == 0 ? 0 : a_[0].size();
    for (const auto& r : a_)
        if (r.size() != cols_) throw std::invalid_argument("Mat: ragged rows");
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = a_[r][c];
    return t;
}

namespace {

// Forward elimination into row-echelon form. Returns the pivot columns.
// When det_out is given the matrix must be square: accumulates the
// determinant (0 when short of full rank).
std::vector<std::size_t> echelonize(std::vector<std::vector<Rat>>& a, Rat* det_out) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    Rat detv(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            detv = -detv;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    if (det_out) {
        if (pivots.size() < rows) {
            *det_out = Rat(0);
        } else {
            for (std::size_t i = 0; i < rows; ++i) detv *= a[i][pivots[i]];
            *det_out = detv;
        }
    }
    return pivots;
}

std::vector<std::vector<Rat>> copy_rows(const Mat& m) {
    std::vector<std::vector<Rat>> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(m.row(r));
    return a;
}

}  // namespace

std::size_t rank(const Mat& m) {
    auto a = copy_rows(m);
    return echelonize(a, nullptr).size();
}

Rat det(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    auto a = copy_rows(m);
    Rat d;
    echelonize(a, &d);
    return d;
}

std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b) {
    if (m.rows() != m.cols() || b.size() != m.rows())
        throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = m.rows();
    auto a = copy_rows(m);
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto pivots = echelonize(a, nullptr);
    if (pivots.size() != n || (n > 0 && pivots.back() == n)) return std::nullopt;
    // Full rank over the first n columns, so pivot i sits at column i.
    std::vector<Rat> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat s = a[i][n];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

std::vector<std::vector<Rat>> kernel_basis(const Mat& m) {
    const std::size_t cols = m.cols();
    auto a = copy_rows(m);
    auto pivots = echelonize(a, nullptr);

    // Back-substitute to reduced echelon form.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        std::size_t pc = pivots[k];
        Rat inv = Rat(1) / a[k][pc];
        for (std::size_t j = pc; j < cols; ++j) a[k][j] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (a[i][pc].is_zero()) continue;
            Rat f = a[i][pc];
            for (std::size_t j = pc; j < cols; ++j) a[i][j] -= f * a[k][j];
        }
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(cols);
        v[free_c] = Rat(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_consistent(const Mat& m, const std::vector<Rat>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_consistent: shape mismatch");
    const std::size_t cols = m.cols();
    auto a = copy_rows(m);
    for (std::size_t i = 0; i < m.rows(); ++i) a[i].push_back(b[i]);
    auto pivots = echelonize(a, nullptr);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
    if (pivots.size() != cols) return std::nullopt;                     // rank-deficient
    std::vector<Rat> x(cols);
    for (std::size_t i = cols; i-- > 0;) {
        Rat s = a[i][cols];
        for (std::size_t j = pivots[i] + 1; j < cols; ++j) s -= a[i][j] * x[j];
        x[pivots[i]] = s / a[i][pivots[i]];
    }
    return x;
}

std::vector<Rat> normalize_coefficients(std::vector<Rat> coeffs) {
    mpz_class lcm(1);
    bool any = false;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        any = true;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
        lcm = l;
    }
    if (!any) return coeffs;
    mpz_class g(0);
    std::vector<mpz_class> ints;
    ints.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        mpz_class v = c.num() * (lcm / c.den());
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        g = gg;
        ints.push_back(std::move(v));
    }
    int flip = 1;
    for (const auto& v : ints) {
        if (v != 0) {
            flip = sgn(v) < 0 ? -1 : 1;
            break;
        }
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = Rat(flip * ints[i] / g);
    return coeffs;
}

}  // namespace ordinary
