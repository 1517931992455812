#pragma once

// Seeded generators of pointwise structures for property sweeps.

#include <cstdint>
#include <random>

#include "hyperlab/curvature.hpp"

namespace hyperlab {

class StructureSampler {
public:
    explicit StructureSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi);
    double normal();
    int pick(int lo, int hi);  // inclusive

    Vector vector(int m);
    /// Haar-distributed orthogonal matrix (QR with sign-fixed R diagonal).
    Matrix orthogonal(int m);
    /// Symmetric positive-definite with eigenvalues in [0.5, 2].
    Matrix spd(int m);

    /// Canonical structure in a random g-orthonormal frame. With
    /// `general_metric` the Gram matrix is a random SPD matrix.
    AlmostContactStructure structure(int dim, bool general_metric = false);
    /// Random nonzero c with |c| in [0.5, 10].
    double curvature_constant();

    /// g-symmetric random shape operator.
    Matrix shape(const AlmostContactStructure& acs, double scale = 1.0);
    /// g-symmetric shape operator with Aξ = αξ.
    Matrix hopf_shape(const AlmostContactStructure& acs, double alpha, double scale = 1.0);

    CurvatureContext context(int dim, bool general_metric = false);
    CurvatureContext hopf_context(int dim, bool general_metric = false);

    /// Random g-unit vector in ker(η).
    Vector unit_horizontal(const AlmostContactStructure& acs);

    std::mt19937_64& engine() { return rng_; }

private:
    /// Frame F with F^T G F = I used to build structure and shapes.
    Matrix frame_of(const AlmostContactStructure& acs) const;

    std::mt19937_64 rng_;
};

}  // namespace hyperlab
