#include <doctest.h>

#include <cmath>

#include "cdspectra/element.hpp"
#include "cdspectra/errors.hpp"
#include "cdspectra/matrix.hpp"
#include "cdspectra/operators.hpp"
#include "cdspectra/rng.hpp"

using namespace cdspectra;

TEST_CASE("left multiplication by the unit is the identity matrix") {
    for (int level : {0, 1, 3, 5}) {
        const DenseMatrix m = left_mult_matrix(basis_element(level, 0));
        const DenseMatrix id = DenseMatrix::identity(m.dim);
        for (std::size_t i = 0; i < m.entries.size(); ++i)
            CHECK(m.entries[i] == doctest::Approx(id.entries[i]));
    }
    const DenseMatrix scaled = left_mult_matrix(scale(basis_element(2, 0), -2.5));
    for (std::size_t i = 0; i < scaled.dim; ++i)
        for (std::size_t j = 0; j < scaled.dim; ++j)
            CHECK(scaled.at(i, j) == doctest::Approx(i == j ? -2.5 : 0.0));
}

TEST_CASE("multiplication matrices reproduce the recursion") {
    const CdElement x = random_element(4, 31);
    const CdElement y = random_element(4, 32);
    const double scale_xy = 1.0 + norm(x) * norm(y);

    const std::vector<double> lv = matvec(left_mult_matrix(x), y.coords);
    const CdElement xy = multiply(x, y);
    for (std::size_t i = 0; i < lv.size(); ++i)
        CHECK(std::fabs(lv[i] - xy.coords[i]) <= 1e-12 * scale_xy);

    const std::vector<double> rv = matvec(right_mult_matrix(x), y.coords);
    const CdElement yx = multiply(y, x);
    for (std::size_t i = 0; i < rv.size(); ++i)
        CHECK(std::fabs(rv[i] - yx.coords[i]) <= 1e-12 * scale_xy);
}

TEST_CASE("the N operator is the squared norm on division-algebra levels") {
    CdElement e0 = basis_element(3, 0);
    const SymMatrix n0 = n_operator_matrix(e0);
    for (std::size_t i = 0; i < n0.dim(); ++i)
        for (std::size_t j = 0; j < n0.dim(); ++j)
            CHECK(n0.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));

    for (int level = 0; level <= 3; ++level) {
        const CdElement x = random_element(level, mix_seed(33, level));
        const SymMatrix n = n_operator_matrix(x);
        const double expect = norm_sq(x);
        for (std::size_t i = 0; i < n.dim(); ++i)
            for (std::size_t j = 0; j < n.dim(); ++j)
                CHECK(std::fabs(n.at(i, j) - (i == j ? expect : 0.0)) <=
                      1e-10 * (1.0 + expect));
    }
}

TEST_CASE("the N operator product is symmetric to rounding at level 4") {
    const CdElement x = random_element(4, 34);
    const DenseMatrix raw =
        matmul(left_mult_matrix(conjugate(x)), left_mult_matrix(x));
    CHECK(asymmetry(raw) <= 1e-12 * (1.0 + max_abs_entry(raw)));
    const SymMatrix n = n_operator_matrix(x);
    CHECK(n.asymmetry_bound <= 1e-12 * (1.0 + max_abs_entry(n.mat)));
}

TEST_CASE("N reproduces the paper-style adjoint identity and the trace law") {
    for (int level = 0; level <= 7; ++level) {
        const CdElement x = random_element(level, mix_seed(35, 3 * level));
        const CdElement y = random_element(level, mix_seed(35, 3 * level + 1));
        const CdElement z = random_element(level, mix_seed(35, 3 * level + 2));

        const SymMatrix n = n_operator_matrix(x);
        const std::vector<double> nz = matvec(n.mat, z.coords);
        double lhs = 0.0;
        for (std::size_t i = 0; i < nz.size(); ++i) lhs += y.coords[i] * nz[i];
        const double rhs = inner(multiply(x, y), multiply(x, z));
        CHECK(std::fabs(lhs - rhs) <= 1e-9 * (1.0 + norm_sq(x) * norm(y) * norm(z)));

        const double tr = trace(n.mat);
        const double expect = std::pow(2.0, level) * norm_sq(x);
        CHECK(std::fabs(tr - expect) <= 1e-9 * (1.0 + expect));
    }
}

TEST_CASE("symmetrizer rejects a genuinely asymmetric matrix") {
    DenseMatrix bad = DenseMatrix::identity(4);
    bad.at(0, 3) = 1.0;
    CHECK_THROWS_AS(make_symmetric(bad, 1e-10), InternalError);
}
