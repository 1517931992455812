#include "hyperlab/random_structures.hpp"

#include <cmath>

namespace hyperlab {

double StructureSampler::uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

double StructureSampler::normal()
{
    return std::normal_distribution<double>(0.0, 1.0)(rng_);
}

int StructureSampler::pick(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Vector StructureSampler::vector(int m)
{
    Vector v(m);
    for (int i = 0; i < m; ++i) {
        v(i) = normal();
    }
    return v;
}

Matrix StructureSampler::orthogonal(int m)
{
    Matrix raw(m, m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            raw(i, j) = normal();
        }
    }
    Eigen::HouseholderQR<Matrix> qr(raw);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < m; ++j) {
        if (r(j, j) < 0.0) {
            q.col(j) = -q.col(j);
        }
    }
    return q;
}

Matrix StructureSampler::spd(int m)
{
    const Matrix q = orthogonal(m);
    Vector spectrum(m);
    for (int i = 0; i < m; ++i) {
        spectrum(i) = uniform(0.5, 2.0);
    }
    Matrix g = q * spectrum.asDiagonal() * q.transpose();
    return 0.5 * (g + g.transpose());
}

AlmostContactStructure StructureSampler::structure(int dim, bool general_metric)
{
    TangentSpace space = general_metric ? TangentSpace(spd(dim)) : TangentSpace(dim);
    const Matrix frame = space.orthonormal_frame() * orthogonal(dim);
    return AlmostContactStructure::from_frame(space, frame);
}

double StructureSampler::curvature_constant()
{
    const double magnitude = uniform(0.5, 10.0);
    return pick(0, 1) == 0 ? magnitude : -magnitude;
}

Matrix StructureSampler::frame_of(const AlmostContactStructure& acs) const
{
    // Any g-orthonormal frame works for building g-symmetric operators; pick the
    // one whose last vector is ξ so Hopf shapes stay block diagonal.
    return build_phi_basis(acs, {}, 0x5eedULL).matrix();
}

Matrix StructureSampler::shape(const AlmostContactStructure& acs, double scale)
{
    const int m = acs.dim();
    Matrix s(m, m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i <= j; ++i) {
            s(i, j) = s(j, i) = scale * normal();
        }
    }
    const Matrix frame = frame_of(acs);
    return frame * s * frame.transpose() * acs.space().gram();
}

Matrix StructureSampler::hopf_shape(const AlmostContactStructure& acs, double alpha, double scale)
{
    const int m = acs.dim();
    Matrix s = Matrix::Zero(m, m);
    for (int j = 0; j < m - 1; ++j) {
        for (int i = 0; i <= j; ++i) {
            s(i, j) = s(j, i) = scale * normal();
        }
    }
    s(m - 1, m - 1) = alpha;
    const Matrix frame = frame_of(acs);
    return frame * s * frame.transpose() * acs.space().gram();
}

CurvatureContext StructureSampler::context(int dim, bool general_metric)
{
    auto acs = structure(dim, general_metric);
    Matrix a = shape(acs);
    const double c = curvature_constant();
    return CurvatureContext(std::move(acs), std::move(a), c);
}

CurvatureContext StructureSampler::hopf_context(int dim, bool general_metric)
{
    auto acs = structure(dim, general_metric);
    const double alpha = uniform(-3.0, 3.0);
    Matrix a = hopf_shape(acs, alpha);
    const double c = curvature_constant();
    return CurvatureContext(std::move(acs), std::move(a), c);
}

Vector StructureSampler::unit_horizontal(const AlmostContactStructure& acs)
{
    Vector v = acs.horizontal_projector() * vector(acs.dim());
    return v / acs.space().norm(v);
}

}  // namespace hyperlab
