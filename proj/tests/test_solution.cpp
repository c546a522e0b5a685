#include "doctest.h"

#include "oracle.hpp"

#include "girthcut/errors.hpp"
#include "girthcut/solution.hpp"

#include <cmath>

using namespace girthcut;

namespace {

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * y[i];
    }
    return s;
}

// Smallest eigenvalue of the explicit n x n Gram matrix of materialized vectors.
double gram_min_eigenvalue(const VectorSolution& s) {
    const std::size_t n = s.graph().vertex_count();
    std::vector<std::vector<double>> vecs;
    for (Vertex i = 0; i < n; ++i) {
        vecs.push_back(s.materialize(i));
    }
    oracle::Matrix gram(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            gram[i][j] = dot(vecs[i], vecs[j]);
        }
    }
    return oracle::jacobi_eigen(gram).values.front();
}

double max_edge_deviation(const VectorSolution& s, double target) {
    double worst = 0.0;
    for (double p : s.edge_products()) {
        worst = std::max(worst, std::abs(p - target));
    }
    return worst;
}

} // namespace

TEST_CASE("optimal_profile") {
    SUBCASE("k = 2 is the triangle-free assignment") {
        for (int d = 3; d <= 10; ++d) {
            const auto p = optimal_profile(d, 2);
            CHECK(std::abs(p.alphas[0] - 1.0 / std::sqrt(2.0)) <= 1e-12);
            CHECK(std::abs(p.alphas[1] + 1.0 / std::sqrt(2.0 * d)) <= 1e-12);
            CHECK(std::abs(p.sigma + 1.0 / std::sqrt(d)) <= 1e-13);
        }
    }
    SUBCASE("d = 3, k = 3") {
        const auto p = optimal_profile(3, 3);
        const auto dense = oracle::jacobi_eigen(oracle::dense_path_matrix(3, 3, false));
        CHECK(std::abs(p.sigma - dense.values[0]) <= 1e-12);
        CHECK(std::abs(p.sigma + std::sqrt(5.0) / 3.0) <= 1e-13);
    }
    SUBCASE("k = 1") {
        const auto p = optimal_profile(5, 1);
        CHECK(p.alphas == std::vector<double>{1.0});
        CHECK(p.sigma == 0.0);
    }
    CHECK_THROWS_AS(optimal_profile(2, 3), DomainError);
}

TEST_CASE("closed_form_profile") {
    CHECK(closed_form_profile(3, 3).sigma == doctest::Approx(-0.7415816237971965).epsilon(1e-12));
    for (int d = 3; d <= 10; ++d) {
        for (int k = 2; k <= 12; ++k) {
            CHECK(closed_form_profile(d, k).sigma >= optimal_profile(d, k).sigma);
        }
        const auto c = closed_form_profile(d, 2);
        const auto o = optimal_profile(d, 2);
        for (int l = 0; l < 2; ++l) {
            CHECK(std::abs(c.alphas[l] - o.alphas[l]) <= 1e-12);
        }
        CHECK(std::abs(c.sigma - o.sigma) <= 1e-12);
    }
    CHECK_THROWS_AS(closed_form_profile(3, 1), DomainError);
}

TEST_CASE("strict vectors on cages") {
    SUBCASE("Heawood, k = 3") {
        const Graph g = builtin("heawood");
        const auto s = build_vectors(g, optimal_profile(3, 3), Mode::Strict);
        CHECK(s.edge_products().size() == 21);
        CHECK(max_edge_deviation(s, -std::sqrt(5.0) / 3.0) <= 1e-10);
        for (Vertex i = 0; i < 14; ++i) {
            CHECK(std::abs(s.norm(i) - 1.0) <= 1e-12);
            CHECK(s.normalization()[i] == 1.0);
        }
        CHECK(sdp_objective(s) == doctest::Approx(21.0 * (1.0 + std::sqrt(5.0) / 3.0) / 2.0).epsilon(1e-12));
        CHECK(sdp_objective(s) == doctest::Approx(18.326).epsilon(1e-4));
    }
    SUBCASE("Tutte-Coxeter, k = 4") {
        const Graph g = builtin("tutte_coxeter");
        const auto s = build_vectors(g, optimal_profile(3, 4), Mode::Strict);
        const double lambda = oracle::jacobi_eigen(oracle::dense_path_matrix(3, 4, false)).values[0];
        CHECK(max_edge_deviation(s, lambda) <= 1e-10);
    }
    SUBCASE("Petersen cannot host k = 3") {
        const Graph g = builtin("petersen");
        try {
            build_vectors(g, optimal_profile(3, 3), Mode::Strict);
            FAIL("expected a certification error");
        } catch (const CertificationError& e) {
            CHECK(std::string(e.what()) == "girth 5 < 2k = 6");
        }
        // Odd girth: k = floor(5/2) = 2 is admitted.
        CHECK_NOTHROW(build_vectors(g, optimal_profile(3, 2), Mode::Strict));
    }
}

TEST_CASE("strict edge uniformity and objective on every admissible (graph, k)") {
    for (auto name : builtin_names()) {
        const Graph g = builtin(name);
        const auto cert = certify(g);
        for (int k = 1; k <= cert.k_max; ++k) {
            for (bool closed : {false, true}) {
                if (closed && k < 2) {
                    continue;
                }
                CAPTURE(name);
                CAPTURE(k);
                const auto profile = closed ? closed_form_profile(3, k) : optimal_profile(3, k);
                const auto s = build_vectors(g, profile, Mode::Strict);
                CHECK(max_edge_deviation(s, profile.sigma) <= 1e-10);
                CHECK(sdp_objective(s) ==
                      doctest::Approx(g.edge_count() * (1.0 - profile.sigma) / 2.0).epsilon(1e-12));
            }
        }
        const auto trivial = build_vectors(g, optimal_profile(3, 1), Mode::Strict);
        CHECK(sdp_objective(trivial) == doctest::Approx(g.edge_count() / 2.0));
    }
}

TEST_CASE("strict Gram matrices are positive semidefinite") {
    for (auto name : builtin_names()) {
        const Graph g = builtin(name);
        const int k = certify(g).k_max;
        const auto s = build_vectors(g, optimal_profile(3, k), Mode::Strict);
        CAPTURE(name);
        CHECK(gram_min_eigenvalue(s) >= -1e-9);
    }
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const int d = 3 + static_cast<int>(seed % 2);
        const int min_girth = d == 3 ? 5 : 4;
        const Graph g = random_regular(40 + 2 * seed, d, min_girth, seed);
        const int k = std::min(certify(g).k_max, 3);
        const auto s = build_vectors(g, optimal_profile(d, k), Mode::Strict);
        CHECK(gram_min_eigenvalue(s) >= -1e-9);
    }
}

TEST_CASE("inner_product agrees with materialized vectors") {
    const Graph g = builtin("mcgee");
    const auto s = build_vectors(g, optimal_profile(3, 3), Mode::Strict);
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
        const auto vi = s.materialize(i);
        CHECK(std::abs(dot(vi, vi) - 1.0) <= 1e-12);
        for (Vertex j = 0; j < g.vertex_count(); ++j) {
            CHECK(std::abs(s.inner_product(i, j) - dot(vi, s.materialize(j))) <= 1e-14);
        }
    }
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        CHECK(std::abs(s.edge_products()[e] - s.inner_product(edges[e].u, edges[e].v)) <= 1e-14);
    }
}

TEST_CASE("zero-padded coefficients reproduce the truncated solution") {
    const Graph g = builtin("tutte_coxeter");
    const auto base = optimal_profile(3, 3);
    CoefficientProfile padded = base;
    padded.order = 6;
    padded.alphas.resize(6, 0.0);
    const auto strict = build_vectors(g, base, Mode::Strict);
    const auto wide = build_vectors(g, padded, Mode::Practical);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        CHECK(std::abs(strict.edge_products()[e] - wide.edge_products()[e]) <= 1e-14);
    }
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
        CHECK(std::abs(wide.normalization()[i] - 1.0) <= 1e-14);
    }
}

TEST_CASE("practical mode") {
    SUBCASE("identical to strict where strict applies") {
        const Graph g = builtin("heawood");
        const auto profile = optimal_profile(3, 3);
        const auto strict = build_vectors(g, profile, Mode::Strict);
        const auto practical = build_vectors(g, profile, Mode::Practical);
        for (Vertex i = 0; i < g.vertex_count(); ++i) {
            CHECK(std::abs(practical.normalization()[i] - 1.0) <= 1e-12);
        }
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            CHECK(std::abs(practical.edge_products()[e] - strict.edge_products()[e]) <= 1e-12);
        }
    }
    SUBCASE("renormalizes beyond the girth guarantee") {
        const Graph g = builtin("petersen");
        for (int k = 1; k <= 4; ++k) {
            const auto s = build_vectors(g, optimal_profile(3, k), Mode::Practical);
            for (Vertex i = 0; i < g.vertex_count(); ++i) {
                CHECK(std::abs(s.norm(i) - 1.0) <= 1e-12);
            }
            CHECK(gram_min_eigenvalue(s) >= -1e-9);
        }
        // k = 3 on girth 5: balls still fill their shells, so norms stay 1,
        // but the two endpoints of an edge share more than a path.
        const auto wrapped = build_vectors(g, optimal_profile(3, 3), Mode::Practical);
        CHECK(max_edge_deviation(wrapped, optimal_profile(3, 3).sigma) > 1e-3);
        // k = 4: the distance-3 shell is empty, so vectors get rescaled.
        const auto s = build_vectors(g, optimal_profile(3, 4), Mode::Practical);
        CHECK(s.normalization()[0] > 1.0 + 1e-6);
        for (double p : s.edge_products()) {
            CHECK(p >= -1.0);
            CHECK(p <= 1.0);
        }
    }
    SUBCASE("non-regular graphs are rejected") {
        const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
        const Graph star(4, edges);
        CHECK_THROWS_AS(build_vectors(star, optimal_profile(3, 2), Mode::Practical), CertificationError);
    }
}

TEST_CASE("degree mismatch and malformed profiles") {
    const Graph g = builtin("heawood");
    CHECK_THROWS_AS(build_vectors(g, optimal_profile(4, 2), Mode::Strict), CertificationError);
    CHECK_THROWS_AS(build_vectors(g, optimal_profile(4, 2), Mode::Practical), CertificationError);
    CoefficientProfile broken = optimal_profile(3, 3);
    broken.alphas.pop_back();
    CHECK_THROWS_AS(build_vectors(g, broken, Mode::Strict), DomainError);
}
