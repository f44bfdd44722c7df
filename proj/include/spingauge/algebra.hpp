#pragma once

// Concrete Cl(4,C) representation: gamma matrices in the chirality-adapted
// Pauli-block basis, Spin(3,1) generators, spin exponentials, the invariant
// sesquilinear product and the chirality split.

#include "linalg.hpp"

namespace spingauge {

inline Mat2c pauli(int k)
{
    Mat2c s;
    switch (k) {
    case 0: s(0, 0) = 1; s(1, 1) = 1; break;
    case 1: s(0, 1) = 1; s(1, 0) = 1; break;
    case 2: s(0, 1) = cplx(0, -1); s(1, 0) = cplx(0, 1); break;
    case 3: s(0, 0) = 1; s(1, 1) = -1; break;
    default: throw Error("pauli index out of range");
    }
    return s;
}

namespace detail {
inline Mat4c block2(const Mat2c& a, const Mat2c& b, const Mat2c& c, const Mat2c& d)
{
    Mat4c m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m(i, j) = a(i, j);
            m(i, j + 2) = b(i, j);
            m(i + 2, j) = c(i, j);
            m(i + 2, j + 2) = d(i, j);
        }
    return m;
}
} // namespace detail

struct GammaBasis {
    Mat4c gamma[4];     // gamma_k, k = 0..3 (hermitian, unitary)
    Mat4c gamma5;       // gamma0 gamma1 gamma2 gamma3 = diag(I2, -I2)
    Mat4c gamma_plus;   // (I + gamma5)/2
    Mat4c gamma_minus;  // (I - gamma5)/2
    Mat4c gamma_up[4];  // gamma^0 = -i gamma0, gamma^r = gamma_r
};

// gamma_j = offdiag(sigma_j, sigma_j) for j=1..3, gamma_0 = i offdiag(s0, -s0)
inline GammaBasis build_gamma_basis()
{
    GammaBasis g;
    const Mat2c z;
    const Mat2c s0 = pauli(0);
    g.gamma[0] = detail::block2(z, s0, -s0, z) * cplx(0, 1);
    for (int k = 1; k < 4; ++k) g.gamma[k] = detail::block2(z, pauli(k), pauli(k), z);
    g.gamma5 = g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3];
    const Mat4c id = Mat4c::identity();
    g.gamma_plus = (id + g.gamma5) * cplx(0.5);
    g.gamma_minus = (id - g.gamma5) * cplx(0.5);
    g.gamma_up[0] = g.gamma[0] * cplx(0, -1);
    for (int r = 1; r < 4; ++r) g.gamma_up[r] = g.gamma[r];
    return g;
}

struct SpinGenerators {
    Mat4c kappa[6]; // kappa_1..kappa_6 stored at [0..5]
};

// kappa_1 = g3 g2 / 2, kappa_2 = g1 g3 / 2, kappa_3 = g2 g1 / 2,
// kappa_{3+k} = i g0 gk / 2.
inline SpinGenerators build_spin_generators(const GammaBasis& g)
{
    SpinGenerators k;
    k.kappa[0] = g.gamma[3] * g.gamma[2] * cplx(0.5);
    k.kappa[1] = g.gamma[1] * g.gamma[3] * cplx(0.5);
    k.kappa[2] = g.gamma[2] * g.gamma[1] * cplx(0.5);
    for (int j = 1; j <= 3; ++j) k.kappa[2 + j] = g.gamma[0] * g.gamma[j] * cplx(0, 0.5);
    return k;
}

struct SpinElement {
    Mat4c matrix;                    // value of rho(Upsilon(s))
    std::array<double, 6> tau{};     // generator coefficients when built by spin_exp
    bool has_tau = false;
};

inline double spin_element_form_residual(const SpinElement& s, const GammaBasis& g)
{
    return max_abs_diff(s.matrix.adjoint() * g.gamma[0] * s.matrix, g.gamma[0]);
}

inline SpinElement spin_exp(const std::array<double, 6>& tau, const SpinGenerators& gens)
{
    Mat4c x;
    for (int a = 0; a < 6; ++a) x += gens.kappa[a] * cplx(tau[a]);
    SpinElement s;
    s.matrix = expm(x);
    s.tau = tau;
    s.has_tau = true;
    return s;
}

// Images of the Cl(3,1) basis vectors under rho.Upsilon: eps_0 -> i gamma0,
// eps_k -> gamma_k.
inline Mat4c clifford_vector_image(const GammaBasis& g, int i)
{
    return i == 0 ? g.gamma[0] * cplx(0, 1) : g.gamma[i];
}

// Decompose s . rho(Ups(eps_i)) . s^-1 in the span of rho(Ups(eps_j)); the
// coefficients assemble the SO(3,1) matrix of Ad(s). M(j,i) = coefficient of
// eps_j in the image of eps_i, so a component vector transforms as v -> M v.
inline Mat4r spin_to_so31(const SpinElement& s, const GammaBasis& g, double tol = 1e-8)
{
    Mat4c sinv = s.matrix;
    cplx det;
    if (!invert_inplace(sinv, &det)) throw ConjugationNotVectorial("spin element not invertible");

    // The vector images are pairwise orthogonal under Tr(X* Y) with norm 4.
    Mat4r m;
    double residual = 0;
    for (int i = 0; i < 4; ++i) {
        const Mat4c conj_i = s.matrix * clifford_vector_image(g, i) * sinv;
        Mat4c remainder = conj_i;
        for (int j = 0; j < 4; ++j) {
            const Mat4c bj = clifford_vector_image(g, j);
            const cplx coeff = (bj.adjoint() * conj_i).trace() * cplx(0.25);
            if (std::abs(coeff.imag()) > tol)
                throw ConjugationNotVectorial("complex coefficient in vector decomposition");
            m(j, i) = coeff.real();
            remainder -= bj * coeff;
        }
        residual = std::max(residual, remainder.max_abs());
    }
    if (residual > tol)
        throw ConjugationNotVectorial("conjugated vector leaves the span of the basis images");
    return m;
}

struct StateTensor {
    CMat psi; // complex 4xm

    StateTensor() = default;
    explicit StateTensor(CMat p) : psi(std::move(p))
    {
        if (psi.rows() != 4) throw DimensionMismatch("state tensor must have 4 rows");
    }

    int m() const { return psi.cols(); }

    CMat right() const { return block(0); } // rows 1-2
    CMat left() const { return block(2); }  // rows 3-4

private:
    CMat block(int row0) const
    {
        CMat b(2, psi.cols());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < psi.cols(); ++j) b(i, j) = psi(row0 + i, j);
        return b;
    }
};

// <psi1, psi2> = Tr(psi1* gamma0 psi2)
inline cplx hermitian_product(const StateTensor& a, const StateTensor& b, const GammaBasis& g)
{
    if (a.m() != b.m()) throw DimensionMismatch("hermitian_product state widths");
    return (a.psi.adjoint() * mul(g.gamma[0], b.psi)).trace();
}

inline cplx hermitian_product(const CMat& a, const CMat& b, const GammaBasis& g)
{
    if (a.cols() != b.cols() || a.rows() != 4 || b.rows() != 4)
        throw DimensionMismatch("hermitian_product shapes");
    return (a.adjoint() * mul(g.gamma[0], b)).trace();
}

struct ChiralityParts {
    CMat right; // 2xm
    CMat left;  // 2xm
};

inline ChiralityParts chirality_split(const StateTensor& psi)
{
    return {psi.right(), psi.left()};
}

inline CMat embed_right(const CMat& r)
{
    CMat out(4, r.cols());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < r.cols(); ++j) out(i, j) = r(i, j);
    return out;
}

inline CMat embed_left(const CMat& l)
{
    CMat out(4, l.cols());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < l.cols(); ++j) out(i + 2, j) = l(i, j);
    return out;
}

} // namespace spingauge
