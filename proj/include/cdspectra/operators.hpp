#pragma once

#include "cdspectra/element.hpp"
#include "cdspectra/matrix.hpp"

namespace cdspectra {

/// Matrix of y -> x*y on coordinates; column j holds the coordinates of
/// x * e_j.
DenseMatrix left_mult_matrix(const CdElement& x);

/// Matrix of y -> y*x; column j holds the coordinates of e_j * x.
DenseMatrix right_mult_matrix(const CdElement& x);

/// The symmetric operator L_conj(x) . L_x. Built as a product of the two
/// left-multiplication matrices, then certified and symmetrized; a large
/// asymmetry would mean the multiplication recursion is broken.
SymMatrix n_operator_matrix(const CdElement& x);

}  // namespace cdspectra
