#pragma once

// Test-side oracles that do not go through the library's own formulas.

#include <cmath>
#include <random>

#include "hyperlab/curvature.hpp"

namespace testing_support {

using hyperlab::Matrix;
using hyperlab::Vector;

/// Real hypersurface point in C^n = R^{2n}: complex structure J, unit normal
/// N, and T whose orthonormal columns span N^⊥.
struct Ambient {
    Matrix j;
    Vector normal;
    Matrix t;
};

inline Matrix standard_j(int n)
{
    Matrix j = Matrix::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        j(2 * k + 1, 2 * k) = 1.0;
        j(2 * k, 2 * k + 1) = -1.0;
    }
    return j;
}

inline Ambient random_ambient(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss;
    Ambient a;
    a.j = standard_j(n);
    a.normal = Vector(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        a.normal(i) = gauss(rng);
    }
    a.normal.normalize();
    // Householder reflection sending e_last to N; its other columns span N^⊥.
    Vector e = Vector::Zero(2 * n);
    e(2 * n - 1) = 1.0;
    Vector v = a.normal - e;
    Matrix h = Matrix::Identity(2 * n, 2 * n);
    if (v.norm() > 1e-12) {
        v.normalize();
        h -= 2.0 * v * v.transpose();
    }
    a.t = h.leftCols(2 * n - 1);
    return a;
}

/// φ = tangential part of J, ξ = −JN written in the columns of T.
inline hyperlab::AlmostContactStructure induced(const Ambient& a)
{
    const int m = static_cast<int>(a.t.cols());
    const Matrix phi = a.t.transpose() * a.j * a.t;
    const Vector xi = a.t.transpose() * (-a.j * a.normal);
    return hyperlab::AlmostContactStructure(hyperlab::TangentSpace(m), phi, xi, xi);
}

/// Ambient curvature of constant holomorphic sectional curvature c.
inline Vector ambient_curvature(const Matrix& j, double c, const Vector& x, const Vector& y, const Vector& z)
{
    const Vector jx = j * x;
    const Vector jy = j * y;
    const Vector jz = j * z;
    return (c / 4.0) * (y.dot(z) * x - x.dot(z) * y + jy.dot(z) * jx - jx.dot(z) * jy - 2.0 * jx.dot(y) * jz);
}

/// Tangential part of the ambient curvature plus the shape terms.
inline Vector gauss_oracle(const Ambient& a, const Matrix& shape, double c, const Vector& x, const Vector& y,
                           const Vector& z)
{
    const Vector r = a.t.transpose() * ambient_curvature(a.j, c, a.t * x, a.t * y, a.t * z);
    return r + (shape * y).dot(z) * (shape * x) - (shape * x).dot(z) * (shape * y);
}

inline Matrix random_symmetric(int m, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss;
    Matrix s(m, m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i <= j; ++i) {
            s(i, j) = s(j, i) = gauss(rng);
        }
    }
    return s;
}

inline Vector random_vector(int m, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss;
    Vector v(m);
    for (int i = 0; i < m; ++i) {
        v(i) = gauss(rng);
    }
    return v;
}

}  // namespace testing_support
