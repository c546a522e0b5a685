#include "girthcut/rounding.hpp"

#include "girthcut/errors.hpp"
#include "girthcut/philox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

namespace girthcut {

double expected_cut_exact(const VectorSolution& solution) {
    double s = 0.0;
    for (double p : solution.edge_products()) {
        s += std::acos(std::clamp(p, -1.0, 1.0));
    }
    return s / std::numbers::pi;
}

std::size_t cut_size(const Graph& graph, std::span<const std::uint8_t> assignment) {
    if (assignment.size() != graph.vertex_count()) {
        throw DomainError("assignment has " + std::to_string(assignment.size()) + " labels for " +
                          std::to_string(graph.vertex_count()) + " vertices");
    }
    std::size_t cut = 0;
    for (const Edge& e : graph.edges()) {
        cut += assignment[e.u] != assignment[e.v];
    }
    return cut;
}

namespace {

void fill_gaussians(const GaussianField& field, std::uint64_t sample, std::span<double> z) {
    const std::size_t n = z.size();
    for (std::size_t p = 0; 2 * p < n; ++p) {
        const auto g = field.pair(sample, p);
        z[2 * p] = g[0];
        if (2 * p + 1 < n) {
            z[2 * p + 1] = g[1];
        }
    }
}

void project_into(const VectorSolution& solution, std::span<const double> z, std::span<double> x) {
    const std::size_t n = solution.graph().vertex_count();
    const auto& alphas = solution.profile().alphas;
    const auto scale = solution.normalization();
    for (Vertex i = 0; i < n; ++i) {
        double s = 0.0;
        for (const BallEntry& b : solution.support(i)) {
            s += alphas[b.distance] * z[b.vertex];
        }
        x[i] = s * scale[i];
    }
}

// Cut size of the sign pattern of x without materializing labels.
std::size_t sign_cut(const Graph& graph, std::span<const double> x) {
    std::size_t cut = 0;
    for (const Edge& e : graph.edges()) {
        cut += (x[e.u] >= 0.0) != (x[e.v] >= 0.0);
    }
    return cut;
}

struct Tally {
    std::uint64_t sum = 0;
    unsigned __int128 sum_squares = 0;
    std::size_t best_size = 0;
    std::uint64_t best_index = std::numeric_limits<std::uint64_t>::max();

    void add(std::uint64_t index, std::size_t size) {
        sum += size;
        sum_squares += static_cast<unsigned __int128>(size) * size;
        if (size > best_size || (size == best_size && index < best_index)) {
            best_size = size;
            best_index = index;
        }
    }

    void merge(const Tally& other) {
        sum += other.sum;
        sum_squares += other.sum_squares;
        if (other.best_size > best_size || (other.best_size == best_size && other.best_index < best_index)) {
            best_size = other.best_size;
            best_index = other.best_index;
        }
    }
};

Tally run_range(const VectorSolution& solution, const GaussianField& field, std::uint64_t begin,
                std::uint64_t end) {
    const std::size_t n = solution.graph().vertex_count();
    std::vector<double> z(n);
    std::vector<double> x(n);
    Tally tally;
    for (std::uint64_t s = begin; s < end; ++s) {
        fill_gaussians(field, s, z);
        project_into(solution, z, x);
        tally.add(s, sign_cut(solution.graph(), x));
    }
    return tally;
}

} // namespace

std::vector<double> draw_gaussians(SampleKey key, std::size_t n) {
    std::vector<double> z(n);
    fill_gaussians(GaussianField(key.seed), key.index, z);
    return z;
}

std::vector<double> project(const VectorSolution& solution, std::span<const double> z) {
    if (z.size() != solution.graph().vertex_count()) {
        throw DomainError("direction has " + std::to_string(z.size()) + " entries for " +
                          std::to_string(solution.graph().vertex_count()) + " vertices");
    }
    std::vector<double> x(z.size());
    project_into(solution, z, x);
    return x;
}

Cut hyperplane_round(const VectorSolution& solution, SampleKey key) {
    const auto x = project(solution, draw_gaussians(key, solution.graph().vertex_count()));
    Cut cut;
    cut.assignment.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        cut.assignment[i] = x[i] >= 0.0 ? 1 : 0;
    }
    cut.size = cut_size(solution.graph(), cut.assignment);
    return cut;
}

RoundingReport monte_carlo(const VectorSolution& solution, std::uint64_t samples, std::uint64_t seed,
                           MonteCarloOptions options) {
    if (samples == 0) {
        throw DomainError("Monte Carlo needs at least one sample");
    }
    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, samples));

    const GaussianField field(seed);
    std::vector<Tally> tallies(threads);
    if (threads == 1) {
        tallies[0] = run_range(solution, field, 0, samples);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = samples * t / threads;
            const std::uint64_t end = samples * (t + 1) / threads;
            workers.emplace_back([&, t, begin, end] { tallies[t] = run_range(solution, field, begin, end); });
        }
    }

    // Integer sums make the reduction exact, so the partition is irrelevant.
    Tally total;
    for (const Tally& t : tallies) {
        total.merge(t);
    }

    const double m = static_cast<double>(solution.graph().edge_count());
    const auto n = static_cast<long double>(samples);
    RoundingReport report;
    report.samples = samples;
    report.seed = seed;
    report.mean_fraction = m > 0 ? static_cast<double>(static_cast<long double>(total.sum) / (n * m)) : 0.0;
    if (samples == 1) {
        report.std_error = std::numeric_limits<double>::quiet_NaN();
    } else {
        // N * sum(c^2) - (sum c)^2 is exact in 128-bit arithmetic.
        const unsigned __int128 s1 = total.sum;
        const unsigned __int128 spread = static_cast<unsigned __int128>(samples) * total.sum_squares - s1 * s1;
        const long double variance = static_cast<long double>(spread) / (n * (n - 1.0L));
        report.std_error = m > 0 ? static_cast<double>(std::sqrt(variance / n) / m) : 0.0;
    }
    report.best_sample = total.best_index;
    report.best = hyperplane_round(solution, {seed, total.best_index});
    return report;
}

} // namespace girthcut
