#pragma once

// o(3,1) standard representation (kappa-tilde matrices, index table,
// structure constants) and the configurable compact internal group.

#include <vector>

#include "linalg.hpp"

namespace spingauge {

// Index table: a = 1..6 <-> ordered pair (p_a, q_a); stored 0-based.
inline constexpr int PA[6] = {3, 1, 2, 0, 0, 0};
inline constexpr int QA[6] = {2, 3, 1, 1, 2, 3};

struct So31Basis {
    Mat4r kappa_tilde[6];
    double G[6][6][6]{}; // G[a][b][c] = G_ab^c
    Mat4r eta;
};

// [kt_a]^i_j = delta^{i p_a} delta_{j q_a} - delta^{i q_a} eta_{j p_a}
inline Mat4r kappa_tilde_matrix(int a)
{
    Mat4r m;
    m(PA[a], QA[a]) += 1.0;
    m(QA[a], PA[a]) -= eta_diag(PA[a]);
    return m;
}

// Decomposition of X in the span of a matrix basis. Solves the exact linear
// system when the basis is orthogonal under Tr(X* Y), otherwise the normal
// equations; reports the out-of-span residual either way.
struct SpanDecomposition {
    std::vector<cplx> coeff;
    double residual = 0;
};

namespace detail {
inline cplx frob_inner(const Mat4r& a, const Mat4r& b) { return (a.transposed() * b).trace(); }
inline cplx frob_inner(const Mat4c& a, const Mat4c& b) { return (a.adjoint() * b).trace(); }
inline cplx frob_inner(const CMat& a, const CMat& b) { return (a.adjoint() * b).trace(); }

template <typename>
struct is_real_mat : std::false_type {};
template <int R, int C>
struct is_real_mat<Mat<double, R, C>> : std::true_type {};
} // namespace detail

template <typename MatT>
SpanDecomposition decompose_in_span(const MatT& x, const std::vector<MatT>& basis)
{
    const int n = static_cast<int>(basis.size());
    std::vector<cplx> gram(static_cast<size_t>(n) * n), rhs(n);
    bool orthogonal = true;
    for (int a = 0; a < n; ++a) {
        rhs[a] = detail::frob_inner(basis[a], x);
        for (int b = 0; b < n; ++b) {
            gram[static_cast<size_t>(a) * n + b] = detail::frob_inner(basis[a], basis[b]);
            if (a != b && std::abs(gram[static_cast<size_t>(a) * n + b]) > 1e-12) orthogonal = false;
        }
    }
    SpanDecomposition<MatT> out;
    out.coeff.resize(n);
    if (orthogonal) {
        for (int a = 0; a < n; ++a) out.coeff[a] = rhs[a] / gram[static_cast<size_t>(a) * n + a];
    } else {
        out.coeff = lu_solve(gram, rhs, n);
    }
    constexpr bool real_basis = detail::is_real_mat<MatT>::value;
    MatT rem = x;
    for (int a = 0; a < n; ++a) {
        if constexpr (real_basis) {
            rem -= basis[a] * out.coeff[a].real();
            out.residual = std::max(out.residual, std::abs(out.coeff[a].imag()));
        } else {
            rem -= basis[a] * out.coeff[a];
        }
    }
    out.residual = std::max(out.residual, rem.max_abs());
    return out;
}

// Structure constants from commutators: [B_a, B_b] = sum_c K_ab^c B_c.
// Throws NotClosed when a commutator leaves the span.
template <typename MatT>
std::vector<std::vector<std::vector<double>>> structure_constants_from_brackets(
    const std::vector<MatT>& basis, double tol = 1e-8)
{
    const int n = static_cast<int>(basis.size());
    std::vector constants(n, std::vector(n, std::vector<double>(n, 0.0)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const MatT bracket = basis[a] * basis[b] - basis[b] * basis[a];
            const auto dec = decompose_in_span(bracket, basis);
            if (dec.residual > tol) throw NotClosed("commutator leaves the span of the basis");
            for (int c = 0; c < n; ++c) {
                if (std::abs(dec.coeff[c].imag()) > tol)
                    throw NotClosed("complex structure constant for a real algebra");
                constants[a][b][c] = dec.coeff[c].real();
            }
        }
    return constants;
}

inline So31Basis build_so31()
{
    So31Basis b;
    for (int i = 0; i < 4; ++i) b.eta(i, i) = eta_diag(i);
    std::vector<Mat4r> basis;
    for (int a = 0; a < 6; ++a) {
        b.kappa_tilde[a] = kappa_tilde_matrix(a);
        basis.push_back(b.kappa_tilde[a]);
    }
    const auto g = structure_constants_from_brackets(basis, 1e-12);
    for (int a = 0; a < 6; ++a)
        for (int bb = 0; bb < 6; ++bb)
            for (int c = 0; c < 6; ++c) b.G[a][bb][c] = std::round(g[a][bb][c]); // integer table
    return b;
}

struct InternalGroup {
    int m = 0;               // dim of W
    int mU = 0;              // number of generators
    std::vector<CMat> theta; // antihermitian m x m
    std::vector<std::vector<std::vector<double>>> C; // C[b][c][a]: [th_b, th_c] = sum_a C_bc^a th_a
};

inline void validate_internal_group(const InternalGroup& grp, double tol = 1e-10)
{
    for (const auto& th : grp.theta) {
        if (th.rows() != grp.m || th.cols() != grp.m)
            throw DimensionMismatch("internal generator shape");
        if (max_abs_diff(th.adjoint(), -th) > tol)
            throw NonAntihermitianGenerator("theta* != -theta");
    }
    // bracket closure against the declared constants
    for (int b = 0; b < grp.mU; ++b)
        for (int c = 0; c < grp.mU; ++c) {
            CMat lhs = grp.theta[b] * grp.theta[c] - grp.theta[c] * grp.theta[b];
            for (int a = 0; a < grp.mU; ++a) lhs -= grp.theta[a] * cplx(grp.C[b][c][a]);
            if (lhs.max_abs() > tol) throw NotClosed("internal group bracket closure");
        }
}

inline InternalGroup u1_group()
{
    InternalGroup g;
    g.m = 1;
    g.mU = 1;
    CMat th(1, 1);
    th(0, 0) = cplx(0, 1);
    g.theta.push_back(th);
    g.C = {{{0.0}}};
    return g;
}

} // namespace spingauge
