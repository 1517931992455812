#include "hyperlab/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hyperlab/errors.hpp"

namespace hyperlab {

namespace {

std::string dims_message(const char* what, long rows, long cols, int dim)
{
    std::ostringstream os;
    os << what << " has shape " << rows << "x" << cols << ", expected dimension " << dim;
    return os.str();
}

}  // namespace

TangentSpace::TangentSpace(int dim) : TangentSpace(Matrix::Identity(dim < 0 ? 0 : dim, dim < 0 ? 0 : dim))
{
}

TangentSpace::TangentSpace(Matrix gram) : gram_(std::move(gram))
{
    if (gram_.rows() != gram_.cols()) {
        throw StructuralError("metric must be square");
    }
    const auto m = gram_.rows();
    if (m < 3 || m % 2 == 0) {
        throw StructuralError("tangent space dimension must be odd and at least 3, got " +
                              std::to_string(m));
    }
    if ((gram_ - gram_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + gram_.cwiseAbs().maxCoeff())) {
        throw StructuralError("metric is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(gram_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() <= 0.0) {
        throw StructuralError("metric is not positive-definite");
    }
    euclidean_ = gram_.isIdentity(0.0);
    Eigen::LLT<Matrix> llt(gram_);
    upper_ = llt.matrixU();
}

double TangentSpace::inner(const Vector& x, const Vector& y) const
{
    if (euclidean_) {
        return x.dot(y);
    }
    return x.dot(gram_ * y);
}

double TangentSpace::norm(const Vector& x) const
{
    return std::sqrt(std::max(0.0, inner(x, x)));
}

Matrix TangentSpace::adjoint(const Matrix& m) const
{
    if (euclidean_) {
        return m.transpose();
    }
    return gram_.ldlt().solve(m.transpose() * gram_);
}

double TangentSpace::restricted_norm(const Matrix& m, const Matrix& basis) const
{
    if (basis.cols() == 0) {
        return 0.0;
    }
    const Matrix image = euclidean_ ? Matrix(m * basis) : Matrix(upper_ * m * basis);
    if (image.cols() == 1) {
        return image.col(0).norm();
    }
    Eigen::JacobiSVD<Matrix> svd(image);
    return svd.singularValues()(0);
}

double TangentSpace::restricted_frobenius(const Matrix& m, const Matrix& basis) const
{
    const Matrix image = euclidean_ ? Matrix(m * basis) : Matrix(upper_ * m * basis);
    return image.norm();
}

Matrix TangentSpace::orthonormal_frame() const
{
    if (euclidean_) {
        return Matrix::Identity(dim(), dim());
    }
    // gram = U^T U, so the columns of U^{-1} are g-orthonormal.
    return upper_.triangularView<Eigen::Upper>().solve(Matrix::Identity(dim(), dim()));
}

void TangentSpace::require_vector(const Vector& v, const char* what) const
{
    if (v.size() != dim()) {
        throw StructuralError(dims_message(what, v.size(), 1, dim()));
    }
}

void TangentSpace::require_matrix(const Matrix& m, const char* what) const
{
    if (m.rows() != dim() || m.cols() != dim()) {
        throw StructuralError(dims_message(what, m.rows(), m.cols(), dim()));
    }
}

AlmostContactStructure::AlmostContactStructure(TangentSpace space, Matrix phi, Vector xi, Vector eta)
    : space_(std::move(space)), phi_(std::move(phi)), xi_(std::move(xi)), eta_(std::move(eta))
{
    space_.require_matrix(phi_, "phi");
    space_.require_vector(xi_, "xi");
    space_.require_vector(eta_, "eta");
}

AlmostContactStructure AlmostContactStructure::canonical(int n)
{
    if (n < 2) {
        throw StructuralError("complex dimension n must be at least 2");
    }
    const int m = 2 * n - 1;
    Matrix phi = Matrix::Zero(m, m);
    for (int i = 0; i < n - 1; ++i) {
        phi(n - 1 + i, i) = 1.0;
        phi(i, n - 1 + i) = -1.0;
    }
    Vector xi = Vector::Unit(m, m - 1);
    Vector eta = xi;
    return AlmostContactStructure(TangentSpace(m), std::move(phi), std::move(xi), std::move(eta));
}

AlmostContactStructure AlmostContactStructure::from_frame(const TangentSpace& space, const Matrix& frame)
{
    space.require_matrix(frame, "frame");
    const auto base = canonical(space.complex_dim());
    // frame^{-1} = frame^T G for a g-orthonormal frame.
    const Matrix inverse = frame.transpose() * space.gram();
    Matrix phi = frame * base.phi() * inverse;
    Vector xi = frame * base.xi();
    Vector eta = space.gram() * xi;
    return AlmostContactStructure(space, std::move(phi), std::move(xi), std::move(eta));
}

Matrix AlmostContactStructure::horizontal_projector() const
{
    return Matrix::Identity(dim(), dim()) - eta_xi();
}

ResidualMap validate_acs(const AlmostContactStructure& acs)
{
    const int m = acs.dim();
    const Matrix& g = acs.space().gram();
    const Matrix& phi = acs.phi();
    const Vector& xi = acs.xi();
    const Vector& eta = acs.eta();
    const Matrix id = Matrix::Identity(m, m);

    auto max_abs = [](const auto& expr) { return Matrix(expr).cwiseAbs().maxCoeff(); };

    ResidualMap r;
    r["phi-square"] = max_abs(phi * phi - (-id + xi * eta.transpose()));
    r["eta-phi"] = max_abs(eta.transpose() * phi);
    r["phi-xi"] = max_abs(phi * xi);
    r["eta-xi"] = std::abs(eta.dot(xi) - 1.0);
    r["metric-compatible"] = max_abs(phi.transpose() * g * phi - (g - eta * eta.transpose()));
    r["phi-skew"] = max_abs(g * phi + phi.transpose() * g);
    r["eta-metric-dual"] = max_abs(eta - g * xi);
    return r;
}

double max_residual(const ResidualMap& residuals)
{
    double worst = 0.0;
    for (const auto& [name, value] : residuals) {
        worst = std::max(worst, value);
    }
    return worst;
}

PhiBasis::PhiBasis(int n, std::vector<Vector> vectors) : n_(n), vectors_(std::move(vectors))
{
    if (static_cast<int>(vectors_.size()) != 2 * n_ - 1) {
        throw StructuralError("phi-basis must hold 2n - 1 vectors");
    }
}

Matrix PhiBasis::matrix() const
{
    const auto m = static_cast<Eigen::Index>(vectors_.size());
    Matrix out(vectors_.front().size(), m);
    for (Eigen::Index j = 0; j < m; ++j) {
        out.col(j) = vectors_[static_cast<std::size_t>(j)];
    }
    return out;
}

Matrix PhiBasis::horizontal() const
{
    return matrix().leftCols(2 * n_ - 2);
}

PhiBasis build_phi_basis(const AlmostContactStructure& acs, std::span<const Vector> seeds,
                         std::uint64_t rng_seed, double tolerance)
{
    if (max_residual(validate_acs(acs)) > tolerance) {
        throw PreconditionError("build_phi_basis: structure fails its axioms");
    }
    const int n = acs.complex_dim();
    const int m = acs.dim();
    const TangentSpace& space = acs.space();

    std::mt19937_64 rng(rng_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<Vector> accepted{acs.xi()};
    std::vector<Vector> vs;
    std::vector<Vector> phivs;

    auto project = [&](Vector s) {
        // Two Gram–Schmidt sweeps keep the result orthogonal to working precision.
        for (int sweep = 0; sweep < 2; ++sweep) {
            for (const auto& e : accepted) {
                s -= space.inner(s, e) * e;
            }
        }
        return s;
    };

    std::size_t next_seed = 0;
    for (int i = 0; i < n - 1; ++i) {
        Vector candidate;
        for (int attempt = 0;; ++attempt) {
            const bool supplied = next_seed < seeds.size();
            Vector seed;
            if (supplied) {
                seed = seeds[next_seed++];
                space.require_vector(seed, "seed");
            } else {
                seed = Vector::NullaryExpr(m, [&] { return gauss(rng); });
            }
            const double seed_norm = space.norm(seed);
            Vector projected = project(seed);
            const double projected_norm = space.norm(projected);
            if (seed_norm > 0.0 && projected_norm > tolerance * seed_norm) {
                candidate = projected / projected_norm;
                break;
            }
            if (supplied) {
                throw DegenerateSeedError("seed " + std::to_string(next_seed - 1) +
                                          " has no component outside span{xi, V_j, phi V_j}");
            }
            if (attempt > 64) {
                throw DegenerateSeedError("random seeds repeatedly degenerate");
            }
        }
        Vector image = acs.phi() * candidate;
        accepted.push_back(candidate);
        accepted.push_back(image);
        vs.push_back(std::move(candidate));
        phivs.push_back(std::move(image));
    }

    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(m));
    for (auto& v : vs) {
        out.push_back(std::move(v));
    }
    for (auto& v : phivs) {
        out.push_back(std::move(v));
    }
    out.push_back(acs.xi());
    return PhiBasis(n, std::move(out));
}

Vector nabla_xi(const AlmostContactStructure& acs, const Matrix& shape, const Vector& x)
{
    acs.space().require_matrix(shape, "shape operator");
    acs.space().require_vector(x, "X");
    return acs.phi() * (shape * x);
}

Vector nabla_phi(const AlmostContactStructure& acs, const Matrix& shape, const Vector& x,
                 const Vector& y)
{
    acs.space().require_matrix(shape, "shape operator");
    acs.space().require_vector(x, "X");
    acs.space().require_vector(y, "Y");
    const Vector ax = shape * x;
    return acs.eta_of(y) * ax - acs.inner(ax, y) * acs.xi();
}

}  // namespace hyperlab
