#include "cdspectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cdspectra/errors.hpp"
#include "cdspectra/operators.hpp"

namespace cdspectra {

namespace {

constexpr int kMaxSweeps = 100;

double offdiag_frobenius(const DenseMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            if (i != j) s += a.at(i, j) * a.at(i, j);
    return std::sqrt(s);
}

double max_orthonormality_defect(const DenseMatrix& v) {
    double worst = 0.0;
    for (std::size_t i = 0; i < v.dim; ++i) {
        for (std::size_t j = i; j < v.dim; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < v.dim; ++k) dot += v.at(k, i) * v.at(k, j);
            worst = std::max(worst, std::fabs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

}  // namespace

Spectrum jacobi_eigen(const SymMatrix& input, double tol) {
    if (tol <= 0.0) throw InputError("jacobi_eigen: tolerance must be positive");
    const std::size_t n = input.dim();
    DenseMatrix a = input.mat;
    DenseMatrix v = DenseMatrix::identity(n);
    const double norm_f = frobenius_norm(a);

    bool converged = norm_f == 0.0;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (offdiag_frobenius(a) <= tol * norm_f) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double tau = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a.at(k, p);
                    const double akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a.at(p, k);
                    const double aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v.at(k, p);
                    const double vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - s * vkq;
                    v.at(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged && offdiag_frobenius(a) > tol * norm_f) {
        throw SolverError("jacobi_eigen: no convergence after " +
                          std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a.at(i, i) < a.at(j, j); });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = DenseMatrix::zero(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a.at(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors.at(i, k) = v.at(i, order[k]);
    }

    // residual against the certified input, not the rotated copy
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double res_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double av = 0.0;
            for (std::size_t j = 0; j < n; ++j) av += input.at(i, j) * out.eigenvectors.at(j, k);
            const double r = av - out.eigenvalues[k] * out.eigenvectors.at(i, k);
            res_sq += r * r;
        }
        worst = std::max(worst, std::sqrt(res_sq));
    }
    out.residual = worst;

    const double spectral_scale =
        n == 0 ? 0.0
               : std::max(std::fabs(out.eigenvalues.front()), std::fabs(out.eigenvalues.back()));
    if (out.residual > 1e-8 * (1.0 + spectral_scale)) {
        throw SolverError("jacobi_eigen: residual " + std::to_string(out.residual) +
                          " above bound for spectral scale " + std::to_string(spectral_scale));
    }
    if (max_orthonormality_defect(out.eigenvectors) > 1e-9) {
        throw SolverError("jacobi_eigen: eigenvector set lost orthonormality");
    }
    return out;
}

SpectrumMultiset cluster_eigenvalues(std::vector<double> eigenvalues, double threshold) {
    if (threshold <= 0.0) throw InputError("cluster_eigenvalues: threshold must be positive");
    std::sort(eigenvalues.begin(), eigenvalues.end());

    SpectrumMultiset out;
    out.cluster_threshold = threshold;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= eigenvalues.size(); ++i) {
        // a gap exactly at the threshold merges
        if (i == eigenvalues.size() || eigenvalues[i] - eigenvalues[i - 1] > threshold) {
            const std::size_t count = i - start;
            const double sum = std::accumulate(eigenvalues.begin() + start,
                                               eigenvalues.begin() + i, 0.0);
            out.clusters.push_back({sum / static_cast<double>(count), count});
            start = i;
        }
    }
    return out;
}

SpectrumMultiset shifted_spectrum(const CdElement& x, double cluster_tol) {
    if (cluster_tol <= 0.0) throw InputError("shifted_spectrum: cluster_tol must be positive");
    const Spectrum eig = jacobi_eigen(n_operator_matrix(x));
    const double shift = norm_sq(x);
    std::vector<double> shifted = eig.eigenvalues;
    for (double& v : shifted) v -= shift;
    const double scale = 1.0 + shift;
    return cluster_eigenvalues(std::move(shifted), cluster_tol * scale * scale);
}

bool multiset_subset(const SpectrumMultiset& a, const SpectrumMultiset& b, double tol) {
    double scale = 1.0;
    for (const auto& c : a.clusters) scale = std::max(scale, 1.0 + std::fabs(c.value));
    for (const auto& c : b.clusters) scale = std::max(scale, 1.0 + std::fabs(c.value));
    for (const auto& ca : a.clusters) {
        bool matched = false;
        for (const auto& cb : b.clusters) {
            if (std::fabs(ca.value - cb.value) <= tol * scale) {
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace cdspectra
