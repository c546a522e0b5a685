#include "doctest.h"

#include "oracle.hpp"

#include "girthcut/errors.hpp"
#include "girthcut/spectral.hpp"

#include <cmath>
#include <numbers>

using namespace girthcut;

namespace {

double residual_inf(const PathOperator& op, const Eigenpair& p) {
    const auto y = op.apply(p.vector);
    double r = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        r = std::max(r, std::abs(y[i] - p.value * p.vector[i]));
    }
    return r;
}

double norm2(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return std::sqrt(s);
}

} // namespace

TEST_CASE("path_operator entries") {
    const PathOperator a43(4, 3);
    CHECK(a43.a() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(a43.b() == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-15));
    CHECK(a43.coupling(0) == a43.a());
    CHECK(a43.coupling(1) == a43.b());

    const PathOperator a32(3, 2);
    CHECK(a32.a() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(a32.b() == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-15));

    const PathOperator b35(3, 5, PathVariant::B);
    for (int i = 0; i < 4; ++i) {
        CHECK(b35.coupling(i) == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-15));
    }

    for (int d = 3; d <= 40; ++d) {
        const PathOperator op(d, 4);
        CHECK(op.b() > 0.0);
        CHECK(op.b() <= op.a());
        CHECK(op.a() < 1.0);
    }

    CHECK_THROWS_AS(PathOperator(2, 3), DomainError);
    CHECK_THROWS_AS(PathOperator(3, 0), DomainError);
}

TEST_CASE("apply matches the dense matrix and rejects bad lengths") {
    const PathOperator op(5, 4);
    const auto dense = oracle::dense_path_matrix(5, 4, false);
    const std::vector<double> x{0.3, -1.2, 2.0, 0.7};
    const auto y = op.apply(x);
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) {
            s += dense[i][j] * x[j];
        }
        CHECK(y[i] == doctest::Approx(s).epsilon(1e-15));
    }
    CHECK_THROWS_AS(op.apply(std::vector<double>{1.0, 2.0}), DomainError);
}

TEST_CASE("min_eigenpair small cases") {
    SUBCASE("k = 1 is the zero matrix") {
        const auto p = min_eigenpair(PathOperator(7, 1));
        CHECK(p.value == 0.0);
        REQUIRE(p.vector.size() == 1);
        CHECK(p.vector[0] == 1.0);
    }
    SUBCASE("k = 2 gives -1/sqrt(d)") {
        for (int d = 3; d <= 12; ++d) {
            const auto p = min_eigenpair(PathOperator(d, 2));
            CHECK(std::abs(p.value + 1.0 / std::sqrt(d)) <= 1e-13);
            CHECK(p.vector[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
            CHECK(p.vector[1] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-12));
        }
    }
    SUBCASE("A_3 at d = 3 is -sqrt(a^2 + b^2) = -sqrt(5)/3") {
        const auto p = min_eigenpair(PathOperator(3, 3));
        const auto dense = oracle::jacobi_eigen(oracle::dense_path_matrix(3, 3, false));
        CHECK(std::abs(p.value - dense.values[0]) <= 1e-12);
        CHECK(std::abs(p.value + std::sqrt(5.0) / 3.0) <= 1e-13);
        CHECK(p.vector[0] > 0.0);
    }
}

TEST_CASE("min_eigenpair agrees with a dense Jacobi eigensolver") {
    for (int d = 3; d <= 10; ++d) {
        for (int k = 2; k <= 12; ++k) {
            CAPTURE(d);
            CAPTURE(k);
            const auto p = min_eigenpair(PathOperator(d, k));
            const auto dense = oracle::jacobi_eigen(oracle::dense_path_matrix(d, k, false));
            CHECK(std::abs(p.value - dense.values[0]) <= 1e-10);
            // Simple eigenvalue, so the vectors agree up to sign.
            const auto& ref = dense.vectors[0];
            double dot = 0.0;
            for (int i = 0; i < k; ++i) {
                dot += p.vector[i] * ref[i];
            }
            CHECK(std::abs(std::abs(dot) - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("Sturm counts match the dense spectrum") {
    for (int d : {3, 5, 11}) {
        for (int k : {1, 2, 5, 9}) {
            for (auto variant : {PathVariant::A, PathVariant::B}) {
                const PathOperator op(d, k, variant);
                const auto dense = oracle::jacobi_eigen(oracle::dense_path_matrix(d, k, variant == PathVariant::B));
                for (double x = -1.05; x <= 1.05; x += 0.0137) {
                    const auto expected = std::count_if(dense.values.begin(), dense.values.end(),
                                                        [&](double v) { return v < x; });
                    CHECK(count_eigenvalues_below(op, x) == expected);
                }
            }
        }
    }
}

TEST_CASE("eigenpair residual, norm and sign over a wide grid") {
    for (int d = 3; d <= 20; ++d) {
        for (int k = 1; k <= 30; ++k) {
            for (auto variant : {PathVariant::A, PathVariant::B}) {
                const PathOperator op(d, k, variant);
                const auto p = min_eigenpair(op);
                CAPTURE(d);
                CAPTURE(k);
                CHECK(residual_inf(op, p) <= 1e-12);
                CHECK(std::abs(norm2(p.vector) - 1.0) <= 1e-12);
                CHECK(p.vector[0] > 0.0);
            }
        }
    }
    // Larger orders still converge.
    for (int k : {100, 250}) {
        const PathOperator op(4, k);
        CHECK(residual_inf(op, min_eigenpair(op)) <= 1e-12);
    }
}

TEST_CASE("lambda_min(A_k) is bounded and non-increasing in k") {
    for (int d = 3; d <= 20; ++d) {
        double previous = 0.0;
        for (int k = 2; k <= 30; ++k) {
            const double lambda = min_eigenpair(PathOperator(d, k)).value;
            CHECK(lambda >= -1.0);
            CHECK(lambda < 0.0);
            CHECK(lambda <= previous + 1e-14);
            previous = lambda;
        }
    }
}

TEST_CASE("b_min_eigenvalue closed form") {
    const double b = std::sqrt(2.0) / 3.0;
    CHECK(b_min_eigenvalue(PathOperator(3, 3, PathVariant::B)) ==
          doctest::Approx(2.0 * b * std::cos(3.0 * std::numbers::pi / 4.0)).epsilon(1e-15));
    CHECK(b_min_eigenvalue(PathOperator(3, 3, PathVariant::B)) == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(b_min_eigenvalue(PathOperator(9, 1, PathVariant::B))) <= 1e-16);
    CHECK(std::abs(min_eigenpair(PathOperator(3, 3, PathVariant::B)).value - (-2.0 / 3.0)) <= 1e-12);
    CHECK_THROWS_AS(b_min_eigenvalue(PathOperator(3, 3, PathVariant::A)), UsageError);
}

TEST_CASE("closed_form_w") {
    const auto w3 = closed_form_w(3);
    REQUIRE(w3.size() == 3);
    CHECK(w3[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w3[1] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(w3[2] == doctest::Approx(0.5).epsilon(1e-14));

    const auto w1 = closed_form_w(1);
    CHECK(w1.size() == 1);
    CHECK(w1[0] == doctest::Approx(1.0).epsilon(1e-15));

    const auto w2 = closed_form_w(2);
    CHECK(w2[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(w2[1] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));

    for (int k = 1; k <= 40; ++k) {
        const auto w = closed_form_w(k);
        CHECK(std::abs(norm2(w) - 1.0) <= 1e-12);
        for (int d : {3, 7}) {
            const PathOperator op(d, k, PathVariant::B);
            CHECK(residual_inf(op, {b_min_eigenvalue(op), w}) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(closed_form_w(0), DomainError);
}

TEST_CASE("quadratic_form") {
    const auto w = closed_form_w(3);
    // 2(a - b) w0 w1 + 2 b cos(3 pi / 4), a = 1/sqrt(3), b = sqrt(2)/3.
    const double a = 1.0 / std::sqrt(3.0);
    const double b = std::sqrt(2.0) / 3.0;
    const double expected = 2.0 * (a - b) * w[0] * w[1] + 2.0 * b * std::cos(3.0 * std::numbers::pi / 4.0);
    CHECK(quadratic_form(PathOperator(3, 3), w) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(quadratic_form(PathOperator(3, 3), w) == doctest::Approx(-0.7415816237971965).epsilon(1e-12));
    CHECK(quadratic_form(PathOperator(3, 3, PathVariant::B), w) == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
    CHECK(quadratic_form(PathOperator(5, 4), std::vector<double>(4, 0.0)) == 0.0);
    CHECK_THROWS_AS(quadratic_form(PathOperator(3, 3), std::vector<double>{1.0}), DomainError);
}

TEST_CASE("sigma_closed_form equals w^T A_k w and the inequality chain holds") {
    CHECK(sigma_closed_form(3, 3) == doctest::Approx(-0.7415816237971965).epsilon(1e-12));
    // Relative expectation at (3, 3) truncates to the published 0.78656.
    const double xi = sigma_closed_form(3, 3) / (-2.0 * std::sqrt(2.0) / 3.0);
    CHECK(std::floor(xi * 1e5) == 78656.0);

    for (int d = 3; d <= 20; ++d) {
        for (int k = 2; k <= 30; ++k) {
            CAPTURE(d);
            CAPTURE(k);
            const PathOperator a(d, k);
            const PathOperator b(d, k, PathVariant::B);
            const auto w = closed_form_w(k);
            const double lambda = min_eigenpair(a).value;
            const double qa = quadratic_form(a, w);
            CHECK(std::abs(qa - sigma_closed_form(d, k)) <= 1e-12);
            CHECK(lambda <= qa);
            CHECK(qa < sigma_cosine_bound(d, k));
            CHECK(qa <= b_min_eigenvalue(b));
        }
    }
    CHECK_THROWS_AS(sigma_closed_form(3, 1), DomainError);
    CHECK_THROWS_AS(sigma_closed_form(2, 3), DomainError);
}

TEST_CASE("beta_to_alpha") {
    SUBCASE("k = 2 reproduces the triangle-free assignment") {
        const std::vector<double> beta{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
        const auto p = beta_to_alpha(beta, 3);
        CHECK(p.order == 2);
        CHECK(p.degree == 3);
        CHECK(p.alphas[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(p.alphas[1] == doctest::Approx(-1.0 / std::sqrt(6.0)).epsilon(1e-15));
        CHECK(p.sigma == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    }
    SUBCASE("unit first coordinate") {
        const auto p = beta_to_alpha(std::vector<double>{1.0, 0.0, 0.0, 0.0}, 5);
        CHECK(p.alphas == std::vector<double>{1.0, 0.0, 0.0, 0.0});
        CHECK(p.sigma == 0.0);
    }
    SUBCASE("minimum eigenvector of A_3 at d = 3") {
        const auto dense = oracle::jacobi_eigen(oracle::dense_path_matrix(3, 3, false));
        const auto p = beta_to_alpha(dense.vectors[0], 3);
        CHECK(p.sigma == doctest::Approx(-std::sqrt(5.0) / 3.0).epsilon(1e-12));
    }
    SUBCASE("norm constraint holds for any unit beta") {
        for (int d = 3; d <= 9; ++d) {
            for (int k = 1; k <= 12; ++k) {
                std::vector<double> beta(k);
                for (int i = 0; i < k; ++i) {
                    beta[i] = std::sin(1.7 * i + d);
                }
                const double n = norm2(beta);
                for (double& v : beta) {
                    v /= n;
                }
                const auto p = beta_to_alpha(beta, d);
                double constraint = 0.0;
                for (int l = 0; l < k; ++l) {
                    constraint += shell_size(d, l) * p.alphas[l] * p.alphas[l];
                }
                CHECK(std::abs(constraint - 1.0) <= 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(beta_to_alpha(std::vector<double>{1.0, 1.0}, 3), DomainError);
    CHECK_THROWS_AS(beta_to_alpha(std::vector<double>{}, 3), DomainError);
}
