#pragma once

// Small dense matrix kernels. Everything in this project is 2x2, 4x4, 4xm
// or at most 24x24, so plain loops beat any BLAS call here.

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <vector>

#include "core.hpp"

namespace spingauge {

namespace detail {
inline double abs2(double x) { return std::abs(x); }
inline double abs2(const cplx& x) { return std::abs(x); }
inline double conj_if(double x) { return x; }
inline cplx conj_if(const cplx& x) { return std::conj(x); }
} // namespace detail

template <typename T, int R, int C>
struct Mat {
    std::array<T, static_cast<size_t>(R) * C> v{};

    static constexpr int rows = R;
    static constexpr int cols = C;

    T& operator()(int r, int c) { return v[static_cast<size_t>(r) * C + c]; }
    const T& operator()(int r, int c) const { return v[static_cast<size_t>(r) * C + c]; }

    static Mat zero() { return Mat{}; }
    static Mat identity()
    {
        static_assert(R == C);
        Mat m;
        for (int i = 0; i < R; ++i) m(i, i) = T(1);
        return m;
    }

    Mat& operator+=(const Mat& o)
    {
        for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
        return *this;
    }
    Mat& operator-=(const Mat& o)
    {
        for (size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
        return *this;
    }
    Mat& operator*=(const T& s)
    {
        for (auto& x : v) x *= s;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, const T& s) { return a *= s; }
    friend Mat operator*(const T& s, Mat a) { return a *= s; }
    friend Mat operator-(Mat a)
    {
        for (auto& x : a.v) x = -x;
        return a;
    }

    template <int K>
    friend Mat<T, R, K> operator*(const Mat& a, const Mat<T, C, K>& b)
    {
        Mat<T, R, K> out;
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j) {
                const T aij = a(i, j);
                for (int k = 0; k < K; ++k) out(i, k) += aij * b(j, k);
            }
        return out;
    }

    Mat<T, C, R> transposed() const
    {
        Mat<T, C, R> out;
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Mat<T, C, R> adjoint() const
    {
        Mat<T, C, R> out;
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j) out(j, i) = detail::conj_if((*this)(i, j));
        return out;
    }

    Mat conjugated() const
    {
        Mat out = *this;
        for (auto& x : out.v) x = detail::conj_if(x);
        return out;
    }

    T trace() const
    {
        static_assert(R == C);
        T s{};
        for (int i = 0; i < R; ++i) s += (*this)(i, i);
        return s;
    }

    double max_abs() const
    {
        double m = 0;
        for (const auto& x : v) m = std::max(m, detail::abs2(x));
        return m;
    }
};

using Mat2c = Mat<cplx, 2, 2>;
using Mat4c = Mat<cplx, 4, 4>;
using Mat4r = Mat<double, 4, 4>;
using Vec4 = std::array<double, 4>;

inline double max_abs_diff(const Vec4& a, const Vec4& b)
{
    double m = 0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

template <typename T, int R, int C>
double max_abs_diff(const Mat<T, R, C>& a, const Mat<T, R, C>& b)
{
    return (a - b).max_abs();
}

// Gaussian elimination with partial pivoting; works for real and complex T.
template <typename T, int N>
bool invert_inplace(Mat<T, N, N>& m, T* det_out = nullptr)
{
    Mat<T, N, N> inv = Mat<T, N, N>::identity();
    T det = T(1);
    for (int col = 0; col < N; ++col) {
        int piv = col;
        for (int r = col + 1; r < N; ++r)
            if (detail::abs2(m(r, col)) > detail::abs2(m(piv, col))) piv = r;
        if (detail::abs2(m(piv, col)) == 0.0) return false;
        if (piv != col) {
            for (int c = 0; c < N; ++c) {
                std::swap(m(piv, c), m(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
            det = -det;
        }
        const T d = m(col, col);
        det *= d;
        for (int c = 0; c < N; ++c) {
            m(col, c) /= d;
            inv(col, c) /= d;
        }
        for (int r = 0; r < N; ++r) {
            if (r == col) continue;
            const T f = m(r, col);
            if (detail::abs2(f) == 0.0) continue;
            for (int c = 0; c < N; ++c) {
                m(r, c) -= f * m(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    m = inv;
    if (det_out) *det_out = det;
    return true;
}

template <typename T, int N>
Mat<T, N, N> inverse(Mat<T, N, N> m, T* det_out = nullptr)
{
    if (!invert_inplace(m, det_out)) throw Error("singular matrix in inverse()");
    return m;
}

template <typename T, int N>
T determinant(Mat<T, N, N> m)
{
    T det = T(1);
    for (int col = 0; col < N; ++col) {
        int piv = col;
        for (int r = col + 1; r < N; ++r)
            if (detail::abs2(m(r, col)) > detail::abs2(m(piv, col))) piv = r;
        if (detail::abs2(m(piv, col)) == 0.0) return T(0);
        if (piv != col) {
            for (int c = col; c < N; ++c) std::swap(m(piv, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < N; ++r) {
            const T f = m(r, col) / m(col, col);
            for (int c = col; c < N; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

// Matrix exponential by scaling and squaring with a truncated Taylor series.
// Series is run until the term drops below 1e-16 relative to the sum, which
// overshoots the 1e-13 contract for the 4x4 generators used here.
template <typename T, int N>
Mat<T, N, N> expm(const Mat<T, N, N>& a)
{
    double norm = 0;
    for (int i = 0; i < N; ++i) {
        double rowsum = 0;
        for (int j = 0; j < N; ++j) rowsum += detail::abs2(a(i, j));
        norm = std::max(norm, rowsum);
    }
    int s = 0;
    while (norm > 0.5) {
        norm *= 0.5;
        ++s;
    }
    Mat<T, N, N> x = a;
    const double scale = std::ldexp(1.0, -s);
    x *= T(scale);

    Mat<T, N, N> sum = Mat<T, N, N>::identity();
    Mat<T, N, N> term = Mat<T, N, N>::identity();
    for (int k = 1; k < 64; ++k) {
        term = term * x;
        term *= T(1.0 / k);
        sum += term;
        if (term.max_abs() <= 1e-16 * std::max(1.0, sum.max_abs())) break;
    }
    for (int i = 0; i < s; ++i) sum = sum * sum;
    return sum;
}

// Dynamic complex matrix; used for the 4xm state tensors and mxm generators.
class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return v_[static_cast<size_t>(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return v_[static_cast<size_t>(r) * cols_ + c]; }

    static CMat identity(int n)
    {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    CMat& operator+=(const CMat& o)
    {
        check_same(o);
        for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    CMat& operator-=(const CMat& o)
    {
        check_same(o);
        for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    CMat& operator*=(const cplx& s)
    {
        for (auto& x : v_) x *= s;
        return *this;
    }

    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(CMat a, const cplx& s) { return a *= s; }
    friend CMat operator*(const cplx& s, CMat a) { return a *= s; }
    friend CMat operator-(CMat a)
    {
        for (auto& x : a.v_) x = -x;
        return a;
    }

    friend CMat operator*(const CMat& a, const CMat& b)
    {
        if (a.cols_ != b.rows_) throw DimensionMismatch("CMat product shapes");
        CMat out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                const cplx aij = a(i, j);
                if (aij == 0.0) continue;
                for (int k = 0; k < b.cols_; ++k) out(i, k) += aij * b(j, k);
            }
        return out;
    }

    CMat adjoint() const
    {
        CMat out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    CMat transposed() const
    {
        CMat out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    CMat conjugated() const
    {
        CMat out = *this;
        for (auto& x : out.v_) x = std::conj(x);
        return out;
    }

    cplx trace() const
    {
        cplx s = 0;
        for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    double max_abs() const
    {
        double m = 0;
        for (const auto& x : v_) m = std::max(m, std::abs(x));
        return m;
    }

private:
    void check_same(const CMat& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("CMat shapes");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<cplx> v_;
};

inline CMat mul(const Mat4c& a, const CMat& b)
{
    if (b.rows() != 4) throw DimensionMismatch("expected 4-row state block");
    CMat out(4, b.cols());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const cplx aij = a(i, j);
            if (aij == 0.0) continue;
            for (int k = 0; k < b.cols(); ++k) out(i, k) += aij * b(j, k);
        }
    return out;
}

inline double max_abs_diff(const CMat& a, const CMat& b) { return (a - b).max_abs(); }

// Dense LU solve for the few runtime-sized systems (24x24 gravity fallback,
// Gram systems for span decompositions).
template <typename T>
std::vector<T> lu_solve(std::vector<T> a, std::vector<T> b, int n)
{
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    auto at = [&](int r, int c) -> T& { return a[static_cast<size_t>(r) * n + c]; };
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (detail::abs2(at(r, col)) > detail::abs2(at(piv, col))) piv = r;
        if (detail::abs2(at(piv, col)) < 1e-300) throw Error("singular system in lu_solve");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(col, c));
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            const T f = at(r, col) / at(col, col);
            at(r, col) = f;
            for (int c = col + 1; c < n; ++c) at(r, c) -= f * at(col, c);
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        T s = b[r];
        for (int c = r + 1; c < n; ++c) s -= at(r, c) * b[c];
        b[r] = s / at(r, r);
    }
    return b;
}

} // namespace spingauge
