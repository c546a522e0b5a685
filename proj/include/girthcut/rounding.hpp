#pragma once

#include "girthcut/graph.hpp"
#include "girthcut/solution.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace girthcut {

// Side labels: 1 for the side where the projection is >= 0, 0 otherwise.
struct Cut {
    std::vector<std::uint8_t> assignment;
    std::size_t size = 0;
};

struct RoundingReport {
    std::uint64_t samples = 0;
    double mean_fraction = 0.0;
    // Standard error of the mean cut fraction; NaN when samples == 1.
    double std_error = 0.0;
    Cut best;
    // Sample index that produced `best` (lowest index among ties).
    std::uint64_t best_sample = 0;
    std::uint64_t seed = 0;
};

// Identifies one rounding draw.
struct SampleKey {
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
};

// (1/pi) * sum over edges of arccos(v_i . v_j), inner products clamped to [-1, 1].
double expected_cut_exact(const VectorSolution& solution);

// Number of edges whose endpoints carry different labels. Throws
// DomainError if the assignment length differs from the vertex count.
std::size_t cut_size(const Graph& graph, std::span<const std::uint8_t> assignment);

// The i.i.d. standard normals z_0..z_{n-1} for one draw.
std::vector<double> draw_gaussians(SampleKey key, std::size_t n);

// x_i = sum over the ball of i of coefficient(i, dist(i,u)) z_u, i.e. the
// projection of v_i onto the direction z.
std::vector<double> project(const VectorSolution& solution, std::span<const double> z);

// Labels vertex i by the sign of its projection onto a Gaussian direction.
Cut hyperplane_round(const VectorSolution& solution, SampleKey key);

struct MonteCarloOptions {
    // Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

// N independent rounds keyed by (seed, sample index). The report does not
// depend on the number of threads. Throws DomainError when N == 0.
RoundingReport monte_carlo(const VectorSolution& solution, std::uint64_t samples, std::uint64_t seed,
                           MonteCarloOptions options = {});

} // namespace girthcut
