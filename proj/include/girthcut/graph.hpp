#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace girthcut {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph in compressed adjacency form. Neighbor lists are
// sorted; edges() lists every edge once with u < v in lexicographic order.
class Graph {
public:
    Graph() = default;

    // Builds a simple graph on n vertices. Duplicate edges collapse;
    // self-loops and out-of-range endpoints throw DomainError.
    Graph(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::vector<Edge> edges_;
};

constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

struct GraphCertificate {
    int degree = 0;
    // kInfiniteGirth for forests.
    int girth = kInfiniteGirth;
    // floor(girth / 2), or kInfiniteGirth for forests.
    int k_max = kInfiniteGirth;

    bool is_forest() const noexcept { return girth == kInfiniteGirth; }
};

// Parses whitespace-separated "u v" pairs with 0-based ids, one pair per
// line. Blank lines and lines starting with '#' are skipped. The vertex
// count is max id + 1. Throws IngestionError with the offending line.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Named fixture graphs: petersen, heawood, pappus, mcgee, tutte_coxeter.
// Throws LookupError listing the valid names.
Graph builtin(std::string_view name);
std::span<const std::string_view> builtin_names();

// Common degree, or CertificationError naming a violating vertex.
int regular_degree(const Graph& g);

// Exact shortest cycle length by BFS from every vertex; kInfiniteGirth for forests.
int girth(const Graph& g);

// Regularity and girth together. Throws DomainError for the empty graph.
GraphCertificate certify(const Graph& g);

// Longest shortest-path distance; kInfiniteGirth if disconnected.
int diameter(const Graph& g);

struct BallEntry {
    Vertex vertex;
    int distance;
};

// Every vertex within `radius` of root in BFS order (distance nondecreasing,
// root first). Throws DomainError if root is out of range or radius < 0.
std::vector<BallEntry> distances_within(const Graph& g, Vertex root, int radius);

struct RandomRegularOptions {
    int max_attempts = 10000;
};

// Pairing-model sample, rejecting non-simple outcomes and girth < min_girth.
// Deterministic for a fixed seed. Throws DomainError on n*d odd or n < d+1,
// GenerationError once the attempt budget is exhausted.
Graph random_regular(std::size_t n, int degree, int min_girth, std::uint64_t seed,
                     RandomRegularOptions options = {});

} // namespace girthcut
