#include "girthcut/solution.hpp"

#include "girthcut/errors.hpp"

#include <cmath>
#include <string>

namespace girthcut {

CoefficientProfile optimal_profile(int degree, int order) {
    const Eigenpair pair = min_eigenpair(PathOperator(degree, order, PathVariant::A));
    CoefficientProfile profile = beta_to_alpha(pair.vector, degree);
    profile.sigma = pair.value;
    return profile;
}

CoefficientProfile closed_form_profile(int degree, int order) {
    if (order < 2) {
        throw DomainError("closed-form profile needs k >= 2, got " + std::to_string(order));
    }
    return beta_to_alpha(closed_form_w(order), degree);
}

namespace {

void check_profile(const CoefficientProfile& profile) {
    if (profile.order < 1 || profile.alphas.size() != static_cast<std::size_t>(profile.order)) {
        throw DomainError("profile has " + std::to_string(profile.alphas.size()) + " coefficients for k = " +
                          std::to_string(profile.order));
    }
}

void check_degree(int graph_degree, const CoefficientProfile& profile) {
    if (graph_degree != profile.degree) {
        throw CertificationError("graph degree " + std::to_string(graph_degree) + " does not match profile degree " +
                                 std::to_string(profile.degree));
    }
}

} // namespace

VectorSolution::VectorSolution(const Graph& graph, CoefficientProfile profile, Mode mode)
    : graph_(&graph), profile_(std::move(profile)), mode_(mode) {
    check_profile(profile_);
    const std::size_t n = graph.vertex_count();
    const int radius = profile_.order - 1;

    ball_offsets_.reserve(n + 1);
    ball_offsets_.push_back(0);
    for (Vertex i = 0; i < n; ++i) {
        const auto ball = distances_within(graph, i, radius);
        ball_entries_.insert(ball_entries_.end(), ball.begin(), ball.end());
        ball_offsets_.push_back(ball_entries_.size());
    }

    normalization_.assign(n, 1.0);
    if (mode_ == Mode::Practical) {
        for (Vertex i = 0; i < n; ++i) {
            normalization_[i] = 1.0 / norm(i);
        }
    } else {
        for (Vertex i = 0; i < n; ++i) {
            const double r = norm(i);
            if (!(std::abs(r - 1.0) <= 1e-12)) {
                throw std::logic_error("strict-mode vector " + std::to_string(i) + " has norm " +
                                       std::to_string(r));
            }
        }
    }

    // Scratch map vertex -> distance from the current edge's first endpoint.
    std::vector<int> dist(n, -1);
    edge_products_.reserve(graph.edge_count());
    for (const Edge& e : graph.edges()) {
        for (const BallEntry& b : support(e.u)) {
            dist[b.vertex] = b.distance;
        }
        double s = 0.0;
        for (const BallEntry& b : support(e.v)) {
            if (dist[b.vertex] >= 0) {
                s += coefficient(e.u, dist[b.vertex]) * coefficient(e.v, b.distance);
            }
        }
        for (const BallEntry& b : support(e.u)) {
            dist[b.vertex] = -1;
        }
        edge_products_.push_back(s);
    }
}

double VectorSolution::norm(Vertex i) const {
    double s = 0.0;
    for (const BallEntry& b : support(i)) {
        const double c = coefficient(i, b.distance);
        s += c * c;
    }
    return std::sqrt(s);
}

double VectorSolution::inner_product(Vertex i, Vertex j) const {
    const auto si = support(i);
    const auto sj = support(j);
    double s = 0.0;
    for (const BallEntry& a : si) {
        for (const BallEntry& b : sj) {
            if (a.vertex == b.vertex) {
                s += coefficient(i, a.distance) * coefficient(j, b.distance);
                break;
            }
        }
    }
    return s;
}

std::vector<double> VectorSolution::materialize(Vertex i) const {
    std::vector<double> v(graph_->vertex_count(), 0.0);
    for (const BallEntry& b : support(i)) {
        v[b.vertex] = coefficient(i, b.distance);
    }
    return v;
}

VectorSolution build_vectors(const Graph& graph, const CoefficientProfile& profile, Mode mode) {
    check_profile(profile);
    if (mode == Mode::Strict) {
        const GraphCertificate cert = certify(graph);
        check_degree(cert.degree, profile);
        if (!cert.is_forest() && cert.k_max < profile.order) {
            throw CertificationError("girth " + std::to_string(cert.girth) + " < 2k = " +
                                     std::to_string(2 * profile.order));
        }
    } else {
        check_degree(regular_degree(graph), profile);
    }
    return VectorSolution(graph, profile, mode);
}

double sdp_objective(const VectorSolution& solution) {
    double s = 0.0;
    for (double p : solution.edge_products()) {
        s += 1.0 - p;
    }
    return 0.5 * s;
}

} // namespace girthcut
