#include "cdspectra/operators.hpp"

namespace cdspectra {

namespace {

enum class Side { Left, Right };

DenseMatrix mult_matrix(const CdElement& x, Side side) {
    const std::size_t n = x.dim();
    DenseMatrix m = DenseMatrix::zero(n);
    for (std::size_t j = 0; j < n; ++j) {
        const CdElement e = basis_element(x.level, j);
        const CdElement col = side == Side::Left ? multiply(x, e) : multiply(e, x);
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col.coords[i];
    }
    return m;
}

}  // namespace

DenseMatrix left_mult_matrix(const CdElement& x) { return mult_matrix(x, Side::Left); }

DenseMatrix right_mult_matrix(const CdElement& x) { return mult_matrix(x, Side::Right); }

SymMatrix n_operator_matrix(const CdElement& x) {
    const DenseMatrix product = matmul(left_mult_matrix(conjugate(x)), left_mult_matrix(x));
    return make_symmetric(product, 1e-10);
}

}  // namespace cdspectra
