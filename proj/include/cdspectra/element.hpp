#pragma once

#include <cstdint>
#include <vector>

namespace cdspectra {

/// Levels above 8 would only grow the dense operators without adding
/// anything the analysis needs.
inline constexpr int kMaxLevel = 8;

/// A point of the Cayley-Dickson algebra at a given doubling level:
/// 2^level real coordinates, index 0 the real part, indices 1..2^n-1 the
/// imaginary basis e1..e_{2^n-1}.
///
/// Basis indexing follows the recursive pair split: an element (x1, x2) of
/// level n keeps x1's coordinates in [0, 2^{n-1}) and x2's in [2^{n-1}, 2^n).
struct CdElement {
    int level = 0;
    std::vector<double> coords{0.0};

    std::size_t dim() const { return coords.size(); }
};

/// Builds an element from raw coordinates. Throws InputError when the
/// coordinate count is not 2^level or the level is outside [0, 8].
CdElement make_element(int level, std::vector<double> coords);

CdElement zero_element(int level);
CdElement basis_element(int level, std::size_t index);

/// Random element with coordinates uniform in [-1, 1).
CdElement random_element(int level, std::uint64_t seed);

CdElement add(const CdElement& x, const CdElement& y);
CdElement subtract(const CdElement& x, const CdElement& y);
CdElement scale(const CdElement& x, double factor);

/// Conjugation: real part kept, every imaginary coordinate negated
/// (the closed form of the recursion conj(x1, x2) = (conj(x1), -x2)).
CdElement conjugate(const CdElement& x);

/// The doubling product
///   (x1, x2)(y1, y2) = (x1 y1 - conj(y2) x2,  y2 x1 + x2 conj(y1)),
/// with plain real multiplication at level 0. Operand order matters from the
/// quaternions up; the recursion is applied exactly as displayed.
CdElement multiply(const CdElement& x, const CdElement& y);

/// Squared Euclidean norm; equals the real part of x * conj(x).
double norm_sq(const CdElement& x);
double norm(const CdElement& x);

/// Euclidean inner product of coordinates; equals the real scalar
/// (x conj(y) + y conj(x)) / 2.
double inner(const CdElement& x, const CdElement& y);

/// x with its real coordinate zeroed, i.e. (x - conj(x)) / 2.
CdElement imaginary_part(const CdElement& x);

/// [x, y] = xy - yx
CdElement commutator(const CdElement& x, const CdElement& y);

/// [x, y, z] = (xy)z - x(yz)
CdElement associator(const CdElement& x, const CdElement& y, const CdElement& z);

/// True iff max over basis elements e of ||[a, a, e]|| <= tol * (1 + ||a||^2).
/// The associator is linear in its last slot, so the basis sweep is exhaustive.
bool is_alternative(const CdElement& a, double tol);

/// Largest basis-sweep associator residual, the quantity is_alternative
/// thresholds: max_e ||[a, a, e]|| / (1 + ||a||^2).
double alternativity_defect(const CdElement& a);

}  // namespace cdspectra
