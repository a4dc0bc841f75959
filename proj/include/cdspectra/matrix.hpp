#pragma once

#include <cstddef>
#include <vector>

namespace cdspectra {

/// Dense row-major real matrix. Dimensions here never exceed 256, so density
/// is the simplest correct representation.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<double> entries;  // row-major, dim * dim

    static DenseMatrix zero(std::size_t dim);
    static DenseMatrix identity(std::size_t dim);

    double at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
    double& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& v);
DenseMatrix transpose(const DenseMatrix& a);

double max_abs_entry(const DenseMatrix& a);
/// max |A[i][j] - A[j][i]|
double asymmetry(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a);
double trace(const DenseMatrix& a);

/// A dense matrix that has been certified symmetric: construction measures
/// max |A[i][j] - A[j][i]|, rejects it beyond the stated bound, and stores the
/// symmetrized (A + A^T)/2.
struct SymMatrix {
    DenseMatrix mat;
    double asymmetry_bound = 0.0;

    std::size_t dim() const { return mat.dim; }
    double at(std::size_t i, std::size_t j) const { return mat.at(i, j); }
};

/// Certifies and symmetrizes. Throws InternalError when the measured
/// asymmetry exceeds max_asymmetry * (1 + max |entry|).
SymMatrix make_symmetric(DenseMatrix a, double max_asymmetry = 1e-10);

}  // namespace cdspectra
