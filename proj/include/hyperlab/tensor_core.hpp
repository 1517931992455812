#pragma once

// Pointwise linear algebra of an almost contact metric structure (φ, ξ, η, g)
// on one tangent space of a real hypersurface.
//
// Every tensor is stored by its components in a fixed working frame. The
// metric is the Gram matrix of that frame; it is the identity unless a test
// deliberately supplies something else. Sign convention: ξ = −JN, so that the
// canonical structure rotates V_i ↦ φV_i ↦ −V_i and fixes ξ as the last frame
// vector.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hyperlab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kStructuralTolerance = 1e-9;

class TangentSpace {
public:
    /// Odd dimension m = 2n − 1 ≥ 3 with the identity Gram matrix.
    explicit TangentSpace(int dim);
    /// Arbitrary symmetric positive-definite Gram matrix.
    explicit TangentSpace(Matrix gram);

    int dim() const { return static_cast<int>(gram_.rows()); }
    /// Complex dimension n of the ambient space, m = 2n − 1.
    int complex_dim() const { return (dim() + 1) / 2; }
    const Matrix& gram() const { return gram_; }
    bool euclidean() const { return euclidean_; }

    double inner(const Vector& x, const Vector& y) const;
    double norm(const Vector& x) const;

    /// g-adjoint M* with g(MX, Y) = g(X, M*Y).
    Matrix adjoint(const Matrix& m) const;

    /// sup |MX|_g over g-unit X in the span of the g-orthonormal columns of `basis`.
    double restricted_norm(const Matrix& m, const Matrix& basis) const;
    /// Frobenius norm of the same restriction, measured in g-orthonormal frames.
    double restricted_frobenius(const Matrix& m, const Matrix& basis) const;

    /// Components of a g-orthonormal frame (columns) built from the standard one.
    Matrix orthonormal_frame() const;

    void require_vector(const Vector& v, const char* what) const;
    void require_matrix(const Matrix& m, const char* what) const;

private:
    Matrix gram_;
    Matrix upper_;  // L^T with gram = L L^T
    bool euclidean_ = true;
};

class AlmostContactStructure {
public:
    /// Checks dimensions only; identities are the business of validate_acs.
    AlmostContactStructure(TangentSpace space, Matrix phi, Vector xi, Vector eta);

    /// Standard structure on R^{2n−1}: e_i ↦ e_{n−1+i} ↦ −e_i, ξ = e_{2n−2}.
    static AlmostContactStructure canonical(int n);
    /// Canonical structure transported by a g-orthonormal frame (columns).
    static AlmostContactStructure from_frame(const TangentSpace& space, const Matrix& frame);

    const TangentSpace& space() const { return space_; }
    const Matrix& phi() const { return phi_; }
    const Vector& xi() const { return xi_; }
    const Vector& eta() const { return eta_; }
    int dim() const { return space_.dim(); }
    int complex_dim() const { return space_.complex_dim(); }

    double eta_of(const Vector& x) const { return eta_.dot(x); }
    double inner(const Vector& x, const Vector& y) const { return space_.inner(x, y); }
    /// Matrix of X ↦ η(X)ξ.
    Matrix eta_xi() const { return xi_ * eta_.transpose(); }
    /// g-orthogonal projector onto ker(η).
    Matrix horizontal_projector() const;

private:
    TangentSpace space_;
    Matrix phi_;
    Vector xi_;
    Vector eta_;
};

using ResidualMap = std::map<std::string, double>;

/// Per-identity max-abs residuals of the axioms
///   φ² = −I + η⊗ξ, η∘φ = 0, φξ = 0, η(ξ) = 1,
///   g(φX, φY) = g(X, Y) − η(X)η(Y), g(X, φY) = −g(φX, Y), η = g(·, ξ).
ResidualMap validate_acs(const AlmostContactStructure& acs);
double max_residual(const ResidualMap& residuals);

class PhiBasis {
public:
    PhiBasis(int n, std::vector<Vector> vectors);

    int complex_dim() const { return n_; }
    std::size_t size() const { return vectors_.size(); }
    const Vector& operator[](std::size_t i) const { return vectors_[i]; }
    const Vector& v(int i) const { return vectors_[static_cast<std::size_t>(i)]; }
    const Vector& phi_v(int i) const { return vectors_[static_cast<std::size_t>(n_ - 1 + i)]; }
    const Vector& xi() const { return vectors_.back(); }
    const std::vector<Vector>& vectors() const { return vectors_; }

    /// All vectors as columns, in order {V_1..V_{n−1}, φV_1..φV_{n−1}, ξ}.
    Matrix matrix() const;
    /// The first 2n − 2 columns: an orthonormal basis of ker(η).
    Matrix horizontal() const;

private:
    int n_;
    std::vector<Vector> vectors_;
};

/// Builds {V_1, …, V_{n−1}, φV_1, …, φV_{n−1}, ξ}. Seeds are consumed in order;
/// any missing ones are drawn from a generator seeded with `rng_seed`.
/// Throws DegenerateSeedError when a supplied seed projects to (nearly) zero.
PhiBasis build_phi_basis(const AlmostContactStructure& acs, std::span<const Vector> seeds = {},
                         std::uint64_t rng_seed = 0, double tolerance = kStructuralTolerance);

/// ∇_X ξ = φAX.
Vector nabla_xi(const AlmostContactStructure& acs, const Matrix& shape, const Vector& x);

/// (∇_X φ)Y = η(Y)AX − g(AX, Y)ξ.
Vector nabla_phi(const AlmostContactStructure& acs, const Matrix& shape, const Vector& x,
                 const Vector& y);

}  // namespace hyperlab
