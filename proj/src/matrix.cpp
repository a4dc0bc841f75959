#include "cdspectra/matrix.hpp"

#include <cmath>
#include <string>

#include "cdspectra/errors.hpp"

namespace cdspectra {

DenseMatrix DenseMatrix::zero(std::size_t dim) {
    return DenseMatrix{dim, std::vector<double>(dim * dim, 0.0)};
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m = zero(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim != b.dim) throw InputError("matmul: dimension mismatch");
    const std::size_t n = a.dim;
    DenseMatrix c = DenseMatrix::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    }
    return c;
}

std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& v) {
    if (v.size() != a.dim) throw InputError("matvec: dimension mismatch");
    std::vector<double> out(a.dim, 0.0);
    for (std::size_t i = 0; i < a.dim; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.dim; ++j) s += a.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t = DenseMatrix::zero(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

double max_abs_entry(const DenseMatrix& a) {
    double m = 0.0;
    for (double v : a.entries) m = std::max(m, std::fabs(v));
    return m;
}

double asymmetry(const DenseMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j)
            m = std::max(m, std::fabs(a.at(i, j) - a.at(j, i)));
    return m;
}

double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (double v : a.entries) s += v * v;
    return std::sqrt(s);
}

double trace(const DenseMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim; ++i) s += a.at(i, i);
    return s;
}

SymMatrix make_symmetric(DenseMatrix a, double max_asymmetry) {
    const double bound = asymmetry(a);
    const double scale = 1.0 + max_abs_entry(a);
    if (bound > max_asymmetry * scale) {
        throw InternalError("make_symmetric: asymmetry " + std::to_string(bound) +
                            " exceeds " + std::to_string(max_asymmetry) + " * scale; "
                            "the upstream product is inconsistent");
    }
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = i + 1; j < a.dim; ++j) {
            const double m = 0.5 * (a.at(i, j) + a.at(j, i));
            a.at(i, j) = m;
            a.at(j, i) = m;
        }
    }
    return SymMatrix{std::move(a), bound};
}

}  // namespace cdspectra
