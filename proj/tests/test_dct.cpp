#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "scope/dct.hpp"
#include "scope/rng.hpp"

using namespace scope;

namespace {

// Independent oracle: the type-II DCT evaluated directly from the summation
// formula, no basis matrix, no shared code with the implementation.
std::vector<double> oracle_dct1(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t m = 0; m < n; ++m)
            s += x[m] * std::cos(std::numbers::pi / static_cast<double>(n) *
                                 (static_cast<double>(m) + 0.5) * static_cast<double>(k));
        const double alpha = (k == 0) ? std::sqrt(1.0 / static_cast<double>(n))
                                      : std::sqrt(2.0 / static_cast<double>(n));
        out[k] = alpha * s;
    }
    return out;
}

// Separable 2D oracle: oracle_dct1 over every row, then over every column.
RealMatrix oracle_dct2(const RealMatrix& m) {
    RealMatrix tmp(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<double> row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
        const auto t = oracle_dct1(row);
        for (std::size_t c = 0; c < m.cols(); ++c) tmp(r, c) = t[c];
    }
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<double> col(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) col[r] = tmp(r, c);
        const auto t = oracle_dct1(col);
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) = t[r];
    }
    return out;
}

RealMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng,
                         double lo = -1.0, double hi = 1.0) {
    RealMatrix m(rows, cols);
    for (double& v : m.data()) v = rng.uniform(lo, hi);
    return m;
}

double gram_identity_error(const RealMatrix& a) {
    const RealMatrix g = matmul(a, transpose(a));
    double worst = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            worst = std::max(worst, std::fabs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

} // namespace

TEST_CASE("dct_basis trivial sizes") {
    const RealMatrix a1 = dct_basis(1);
    REQUIRE(a1.rows() == 1);
    REQUIRE(a1(0, 0) == Catch::Approx(1.0).margin(1e-15));

    const RealMatrix a2 = dct_basis(2);
    const double h = std::sqrt(0.5);
    CHECK(a2(0, 0) == Catch::Approx(h).margin(1e-15));
    CHECK(a2(0, 1) == Catch::Approx(h).margin(1e-15));
    CHECK(a2(1, 0) == Catch::Approx(h).margin(1e-15));
    CHECK(a2(1, 1) == Catch::Approx(-h).margin(1e-15));
}

TEST_CASE("dct_basis orthonormality") {
    CHECK(gram_identity_error(dct_basis(8)) < 1e-12);
    for (std::size_t n : {1, 2, 3, 5, 9, 16, 50, 64, 128, 450}) {
        INFO("n = " << n);
        CHECK(gram_identity_error(dct_basis(n)) < 1e-10);
    }
}

TEST_CASE("dct1 known values") {
    const auto c4 = dct1({1.0, 1.0, 1.0, 1.0});
    REQUIRE(c4.size() == 4);
    CHECK(c4[0] == Catch::Approx(2.0).margin(1e-12));
    CHECK(std::fabs(c4[1]) < 1e-12);
    CHECK(std::fabs(c4[2]) < 1e-12);
    CHECK(std::fabs(c4[3]) < 1e-12);

    const auto c1 = dct1({3.25});
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == Catch::Approx(3.25).margin(1e-15));

    const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
    const auto fast = dct1(x);
    const auto ref = oracle_dct1(x);
    CHECK(fast[0] == Catch::Approx(5.0).margin(1e-12)); // X_0 = sqrt(1/4)*10
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(fast[k] == Catch::Approx(ref[k]).margin(1e-12));
}

TEST_CASE("dct1 rejects bad input") {
    CHECK_THROWS_AS(dct1({}), std::invalid_argument);
    CHECK_THROWS_AS(dct1({1.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(dct1({std::numeric_limits<double>::infinity()}), std::invalid_argument);
}

TEST_CASE("dct1 matches summation oracle for N <= 64") {
    Rng rng(20240811);
    for (std::size_t n = 1; n <= 64; ++n) {
        std::vector<double> x(n);
        for (double& v : x) v = rng.uniform(-5.0, 5.0);
        const auto fast = dct1(x);
        const auto ref = oracle_dct1(x);
        for (std::size_t k = 0; k < n; ++k) {
            INFO("n = " << n << ", k = " << k);
            CHECK(std::fabs(fast[k] - ref[k]) < 1e-12);
        }
    }
}

TEST_CASE("dct2 constant matrix concentrates into DC") {
    const double c = -1.75;
    RealMatrix m(6, 9, c);
    const RealMatrix out = dct2(m);
    CHECK(out(0, 0) == Catch::Approx(c * std::sqrt(54.0)).margin(1e-12));
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t col = 0; col < 9; ++col)
            if (r != 0 || col != 0)
                CHECK(std::fabs(out(r, col)) < 1e-12);
}

TEST_CASE("dct2 size-1 identity") {
    RealMatrix m(1, 1);
    m(0, 0) = 0.6180339887;
    CHECK(dct2(m)(0, 0) == Catch::Approx(0.6180339887).margin(1e-15));
}

TEST_CASE("dct2 matches the separable oracle") {
    Rng rng(77);
    const RealMatrix m = random_matrix(6, 9, rng, -3.0, 3.0);
    const RealMatrix fast = dct2(m);
    const RealMatrix ref = oracle_dct2(m);
    CHECK(max_abs_diff(fast, ref) < 1e-12);
}

TEST_CASE("dct2 rejects non-finite input") {
    RealMatrix m(2, 2, 1.0);
    m(1, 1) = std::nan("");
    CHECK_THROWS_AS(dct2(m), std::invalid_argument);
}

TEST_CASE("dct2 Parseval and linearity") {
    Rng rng(123);
    for (int rep = 0; rep < 10; ++rep) {
        const RealMatrix x = random_matrix(6, 45, rng, -2.0, 2.0);
        const RealMatrix c = dct2(x);
        const double ex = x.sum_squares();
        const double ec = c.sum_squares();
        CHECK(std::fabs(ex - ec) <= 1e-9 * std::max(1.0, ex));
    }

    const RealMatrix x = random_matrix(5, 7, rng);
    const RealMatrix y = random_matrix(5, 7, rng);
    const double a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    RealMatrix combo(5, 7);
    for (std::size_t i = 0; i < combo.size(); ++i)
        combo.data()[i] = a * x.data()[i] + b * y.data()[i];
    const RealMatrix lhs = dct2(combo);
    const RealMatrix cx = dct2(x);
    const RealMatrix cy = dct2(y);
    for (std::size_t i = 0; i < lhs.size(); ++i)
        CHECK(std::fabs(lhs.data()[i] - (a * cx.data()[i] + b * cy.data()[i])) < 1e-10);
}

TEST_CASE("idct2 round trip") {
    Rng rng(4242);
    const RealMatrix m = random_matrix(6, 450, rng, -4.0, 4.0);
    const RealMatrix back = idct2(dct2(m));
    CHECK(max_abs_diff(back, m) < 1e-9);

    const RealMatrix z(3, 4, 0.0);
    CHECK(max_abs_diff(idct2(z), z) == 0.0);

    RealMatrix dc(4, 5, 0.0);
    dc(0, 0) = std::sqrt(20.0);
    const RealMatrix ones = idct2(dc);
    for (double v : ones.data())
        CHECK(v == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("truncate keeps the top-left block") {
    Rng rng(5);
    const RealMatrix c = random_matrix(6, 450, rng);
    const RealMatrix block = truncate(c, {6, 9});
    REQUIRE(block.rows() == 6);
    REQUIRE(block.cols() == 9);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t col = 0; col < 9; ++col)
            CHECK(block(r, col) == c(r, col));

    const RealMatrix full = truncate(c, {6, 450});
    CHECK(max_abs_diff(full, c) == 0.0);

    CHECK_THROWS_AS(truncate(c, {7, 9}), std::invalid_argument);
    CHECK_THROWS_AS(truncate(c, {6, 451}), std::invalid_argument);
    CHECK_THROWS_AS(truncate(c, {0, 9}), std::invalid_argument);
}

TEST_CASE("sparsify") {
    Rng rng(9);
    const RealMatrix c = random_matrix(4, 4, rng);

    SECTION("p = 0 is a no-op") {
        CHECK(max_abs_diff(sparsify(c, 0.0), c) == 0.0);
    }

    SECTION("frozen 2x2 example") {
        RealMatrix m(2, 2, {3.0, -1.0, 0.5, 2.0});
        const RealMatrix out = sparsify(m, 0.5);
        CHECK(out(0, 0) == 3.0);
        CHECK(out(0, 1) == 0.0);
        CHECK(out(1, 0) == 0.0);
        CHECK(out(1, 1) == 2.0);
    }

    SECTION("all-zero input stays zero") {
        const RealMatrix z(3, 3, 0.0);
        CHECK(max_abs_diff(sparsify(z, 0.25), z) == 0.0);
    }

    SECTION("zeroed count is exactly floor(p*count)") {
        for (double p : {0.1, 0.25, 0.37, 0.5, 0.9, 0.999}) {
            const RealMatrix out = sparsify(c, p);
            std::size_t zeros = 0;
            for (double v : out.data())
                if (v == 0.0) ++zeros;
            CHECK(zeros == static_cast<std::size_t>(std::floor(p * 16.0)));
        }
    }

    SECTION("equal magnitudes drop in row-major order") {
        RealMatrix m(1, 4, {1.0, -1.0, 1.0, -1.0});
        const RealMatrix out = sparsify(m, 0.5);
        CHECK(out(0, 0) == 0.0);
        CHECK(out(0, 1) == 0.0);
        CHECK(out(0, 2) == 1.0);
        CHECK(out(0, 3) == -1.0);
    }

    SECTION("invalid fraction") {
        CHECK_THROWS_AS(sparsify(c, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(sparsify(c, -0.1), std::invalid_argument);
    }
}

TEST_CASE("reconstruction error non-increasing in k2") {
    Rng rng(31337);
    const std::size_t rows = 6, cols = 50;
    const RealMatrix m = random_matrix(rows, cols, rng, -2.0, 2.0);
    const DctPlan plan(rows, cols);
    const RealMatrix c = plan.forward(m);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t k2 = 1; k2 <= cols; ++k2) {
        const RealMatrix recon = plan.inverse(zero_pad(truncate(c, {rows, k2}), rows, cols));
        double err2 = 0.0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const double d = m.data()[i] - recon.data()[i];
            err2 += d * d;
        }
        const double err = std::sqrt(err2);
        CHECK(err <= prev + 1e-9);
        prev = err;
    }
    CHECK(prev < 1e-9); // full block reconstructs exactly
}
