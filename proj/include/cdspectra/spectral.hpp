#pragma once

#include <cstddef>
#include <vector>

#include "cdspectra/element.hpp"
#include "cdspectra/matrix.hpp"

namespace cdspectra {

/// Full symmetric eigendecomposition: ascending eigenvalues, orthonormal
/// eigenvector columns, and the worst per-pair residual ||A v - lambda v||.
struct Spectrum {
    std::vector<double> eigenvalues;
    DenseMatrix eigenvectors;  // column k pairs with eigenvalues[k]
    double residual = 0.0;
};

/// Cyclic Jacobi diagonalization. Sweeps until the off-diagonal Frobenius
/// norm drops below tol * ||A||_F; throws SolverError after 100 sweeps.
/// Chosen over tridiagonalization for the quality of its eigenvectors, which
/// the degeneracy analysis leans on.
Spectrum jacobi_eigen(const SymMatrix& a, double tol = 1e-13);

/// Eigenvalues grouped into (value, multiplicity) clusters by single linkage
/// on the sorted sequence: a gap <= threshold merges.
struct SpectrumMultiset {
    struct Cluster {
        double value = 0.0;
        std::size_t multiplicity = 0;
    };
    std::vector<Cluster> clusters;
    double cluster_threshold = 0.0;  // absolute gap used when clustering
};

SpectrumMultiset cluster_eigenvalues(std::vector<double> eigenvalues, double threshold);

/// Relative clustering tolerance: one order above solver residual, well below
/// the eigenvalue gaps of generic angles.
inline constexpr double kDefaultClusterTol = 1e-7;

/// Clustered eigenvalues of the x-multiplication operator L_conj(x) L_x
/// shifted by -||x||^2. The absolute cluster gap is
/// cluster_tol * (1 + ||x||^2)^2, matching how the eigenvalues scale in x.
SpectrumMultiset shifted_spectrum(const CdElement& x, double cluster_tol = kDefaultClusterTol);

/// True iff every cluster value of a is matched by some cluster value of b
/// within tol * (1 + largest absolute value present). Values only:
/// multiplicities are reported by the clusters but not required to nest.
bool multiset_subset(const SpectrumMultiset& a, const SpectrumMultiset& b, double tol);

}  // namespace cdspectra
