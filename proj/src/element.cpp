#include "cdspectra/element.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "cdspectra/errors.hpp"
#include "cdspectra/rng.hpp"

namespace cdspectra {

namespace {

void check_same_level(const CdElement& x, const CdElement& y, const char* op) {
    if (x.level != y.level) {
        throw InputError(std::string(op) + ": level mismatch (" +
                         std::to_string(x.level) + " vs " + std::to_string(y.level) + ")");
    }
}

// conj of a sub-element span: index 0 is that sub-element's real part.
void conj_into(std::span<const double> x, std::span<double> out) {
    out[0] = x[0];
    for (std::size_t i = 1; i < x.size(); ++i) out[i] = -x[i];
}

// out = x * y over a 2^k-dimensional doubling level.
void mul_rec(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    const std::size_t d = x.size();
    if (d == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const std::size_t h = d / 2;
    const auto x1 = x.first(h);
    const auto x2 = x.subspan(h);
    const auto y1 = y.first(h);
    const auto y2 = y.subspan(h);

    std::vector<double> conj_buf(h);
    std::vector<double> term(h);

    // first half: x1*y1 - conj(y2)*x2
    mul_rec(x1, y1, out.first(h));
    conj_into(y2, conj_buf);
    mul_rec(conj_buf, x2, term);
    for (std::size_t i = 0; i < h; ++i) out[i] -= term[i];

    // second half: y2*x1 + x2*conj(y1)
    mul_rec(y2, x1, out.subspan(h));
    conj_into(y1, conj_buf);
    mul_rec(x2, conj_buf, term);
    for (std::size_t i = 0; i < h; ++i) out[h + i] += term[i];
}

}  // namespace

CdElement make_element(int level, std::vector<double> coords) {
    if (level < 0 || level > kMaxLevel) {
        throw InputError("make_element: level " + std::to_string(level) +
                         " outside supported range [0, " + std::to_string(kMaxLevel) + "]");
    }
    const std::size_t expect = std::size_t{1} << level;
    if (coords.size() != expect) {
        throw InputError("make_element: expected " + std::to_string(expect) +
                         " coordinates for level " + std::to_string(level) + ", got " +
                         std::to_string(coords.size()));
    }
    return CdElement{level, std::move(coords)};
}

CdElement zero_element(int level) {
    return make_element(level, std::vector<double>(std::size_t{1} << level, 0.0));
}

CdElement basis_element(int level, std::size_t index) {
    CdElement e = zero_element(level);
    if (index >= e.dim()) {
        throw InputError("basis_element: index " + std::to_string(index) +
                         " out of range for level " + std::to_string(level));
    }
    e.coords[index] = 1.0;
    return e;
}

CdElement random_element(int level, std::uint64_t seed) {
    CdElement e = zero_element(level);
    Rng rng(seed);
    for (auto& c : e.coords) c = rng.symmetric();
    return e;
}

CdElement add(const CdElement& x, const CdElement& y) {
    check_same_level(x, y, "add");
    CdElement out = x;
    for (std::size_t i = 0; i < out.dim(); ++i) out.coords[i] += y.coords[i];
    return out;
}

CdElement subtract(const CdElement& x, const CdElement& y) {
    check_same_level(x, y, "subtract");
    CdElement out = x;
    for (std::size_t i = 0; i < out.dim(); ++i) out.coords[i] -= y.coords[i];
    return out;
}

CdElement scale(const CdElement& x, double factor) {
    CdElement out = x;
    for (auto& c : out.coords) c *= factor;
    return out;
}

CdElement conjugate(const CdElement& x) {
    CdElement out = x;
    for (std::size_t i = 1; i < out.dim(); ++i) out.coords[i] = -out.coords[i];
    return out;
}

CdElement multiply(const CdElement& x, const CdElement& y) {
    check_same_level(x, y, "multiply");
    CdElement out = zero_element(x.level);
    mul_rec(x.coords, y.coords, out.coords);
    return out;
}

double norm_sq(const CdElement& x) {
    double s = 0.0;
    for (double c : x.coords) s += c * c;
    return s;
}

double norm(const CdElement& x) { return std::sqrt(norm_sq(x)); }

double inner(const CdElement& x, const CdElement& y) {
    check_same_level(x, y, "inner");
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += x.coords[i] * y.coords[i];
    return s;
}

CdElement imaginary_part(const CdElement& x) {
    CdElement out = x;
    out.coords[0] = 0.0;
    return out;
}

CdElement commutator(const CdElement& x, const CdElement& y) {
    return subtract(multiply(x, y), multiply(y, x));
}

CdElement associator(const CdElement& x, const CdElement& y, const CdElement& z) {
    return subtract(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
}

double alternativity_defect(const CdElement& a) {
    const CdElement aa = multiply(a, a);
    double worst = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        const CdElement e = basis_element(a.level, j);
        const CdElement lhs = multiply(aa, e);
        const CdElement rhs = multiply(a, multiply(a, e));
        worst = std::max(worst, norm(subtract(lhs, rhs)));
    }
    return worst / (1.0 + norm_sq(a));
}

bool is_alternative(const CdElement& a, double tol) {
    if (tol <= 0.0) throw InputError("is_alternative: tolerance must be positive");
    return alternativity_defect(a) <= tol;
}

}  // namespace cdspectra
