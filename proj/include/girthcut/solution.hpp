#pragma once

#include "girthcut/graph.hpp"
#include "girthcut/spectral.hpp"

#include <span>
#include <vector>

namespace girthcut {

enum class Mode {
    // Requires girth >= 2k; every edge inner product equals profile.sigma.
    Strict,
    // Any k on a regular graph; each vector is renormalized explicitly.
    Practical,
};

// Profile from the minimum eigenvector of A_k; sigma = lambda_min(A_k).
CoefficientProfile optimal_profile(int degree, int order);

// Profile from the closed-form B_k eigenvector w; sigma = w^T A_k w. Needs k >= 2.
CoefficientProfile closed_form_profile(int degree, int order);

/**
 * Implicit unit vectors v_i indexed by vertices: entry u of v_i is
 * alpha_{dist(i,u)} for dist(i,u) < k and zero otherwise, scaled by a
 * per-vertex normalization factor (exactly 1 in strict mode).
 *
 * Vectors are stored as their truncated BFS balls, never as dense arrays.
 * The solution keeps a pointer to the graph, which must outlive it.
 */
class VectorSolution {
public:
    VectorSolution(const Graph& graph, CoefficientProfile profile, Mode mode);

    const Graph& graph() const noexcept { return *graph_; }
    const CoefficientProfile& profile() const noexcept { return profile_; }
    Mode mode() const noexcept { return mode_; }

    std::span<const double> normalization() const noexcept { return normalization_; }

    // Inner products in the order of graph().edges().
    std::span<const double> edge_products() const noexcept { return edge_products_; }

    // Support of v_i: the radius-(k-1) ball around i.
    std::span<const BallEntry> support(Vertex i) const {
        return {ball_entries_.data() + ball_offsets_[i], ball_entries_.data() + ball_offsets_[i + 1]};
    }

    // Entry of v_i at a vertex at the given distance from i (< k).
    double coefficient(Vertex i, int distance) const { return profile_.alphas[distance] * normalization_[i]; }

    double norm(Vertex i) const;
    double inner_product(Vertex i, Vertex j) const;

    // Dense length-n copy of v_i. Intended for verification on small graphs.
    std::vector<double> materialize(Vertex i) const;

private:
    const Graph* graph_;
    CoefficientProfile profile_;
    Mode mode_;
    std::vector<double> normalization_;
    std::vector<std::size_t> ball_offsets_;
    std::vector<BallEntry> ball_entries_;
    std::vector<double> edge_products_;
};

// Validates preconditions and builds the solution. Strict mode throws
// CertificationError unless girth >= 2k and the degree matches the profile;
// practical mode only requires regularity of the profile's degree.
VectorSolution build_vectors(const Graph& graph, const CoefficientProfile& profile, Mode mode);

// (1/2) sum over edges of (1 - v_i . v_j).
double sdp_objective(const VectorSolution& solution);

} // namespace girthcut
