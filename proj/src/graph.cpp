#include "girthcut/graph.hpp"

#include "girthcut/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <string>
#include <unordered_set>

namespace girthcut {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) {
    if (vertex_count >= std::numeric_limits<Vertex>::max()) {
        throw DomainError("too many vertices: " + std::to_string(vertex_count));
    }
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw DomainError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") out of range for " + std::to_string(vertex_count) + " vertices");
        }
        if (e.u == e.v) {
            throw DomainError("self-loop at vertex " + std::to_string(e.u));
        }
        edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    offsets_.assign(vertex_count + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < vertex_count; ++i) {
        offsets_[i + 1] += offsets_[i];
    }
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[cursor[e.u]++] = e.v;
        adjacency_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
    }
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

Vertex parse_vertex(std::string_view token, std::size_t line) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw IngestionError(line, "vertex id out of range: '" + std::string(token) + "'");
    }
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw IngestionError(line, "unparsable token '" + std::string(token) + "'");
    }
    if (value < 0) {
        throw IngestionError(line, "negative vertex id " + std::to_string(value));
    }
    if (value >= static_cast<long long>(std::numeric_limits<Vertex>::max())) {
        throw IngestionError(line, "vertex id out of range: " + std::to_string(value));
    }
    return static_cast<Vertex>(value);
}

} // namespace

Graph load_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::size_t vertex_count = 0;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        std::vector<std::string_view> tokens;
        std::string_view rest(text);
        while (!rest.empty()) {
            std::size_t start = 0;
            while (start < rest.size() && is_space(rest[start])) {
                ++start;
            }
            if (start == rest.size()) {
                break;
            }
            std::size_t end = start;
            while (end < rest.size() && !is_space(rest[end])) {
                ++end;
            }
            tokens.push_back(rest.substr(start, end - start));
            rest.remove_prefix(end);
        }
        if (tokens.empty() || tokens.front().starts_with('#')) {
            continue;
        }
        if (tokens.size() != 2) {
            throw IngestionError(line, "expected two vertex ids, found " + std::to_string(tokens.size()) +
                                           " tokens");
        }
        const Vertex u = parse_vertex(tokens[0], line);
        const Vertex v = parse_vertex(tokens[1], line);
        if (u == v) {
            throw IngestionError(line, "self-loop at vertex " + std::to_string(u));
        }
        edges.push_back({u, v});
        vertex_count = std::max<std::size_t>(vertex_count, std::max(u, v) + std::size_t{1});
    }
    if (in.bad()) {
        throw IngestionError(line, "read failure");
    }
    return Graph(vertex_count, edges);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IngestionError(0, "cannot open '" + path + "'");
    }
    return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

int regular_degree(const Graph& g) {
    if (g.vertex_count() == 0) {
        throw DomainError("graph has no vertices");
    }
    const std::size_t d = g.degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        if (g.degree(v) != d) {
            throw CertificationError("graph is not regular: vertex 0 has degree " + std::to_string(d) +
                                     " but vertex " + std::to_string(v) + " has degree " +
                                     std::to_string(g.degree(v)));
        }
    }
    return static_cast<int>(d);
}

int girth(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr int kUnseen = -1;
    std::vector<int> dist(n, kUnseen);
    std::vector<Vertex> parent(n, 0);
    std::vector<Vertex> queue;
    queue.reserve(n);
    int best = kInfiniteGirth;

    for (Vertex root = 0; root < n; ++root) {
        queue.clear();
        queue.push_back(root);
        dist[root] = 0;
        parent[root] = root;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            // Any cycle closed from here has length >= 2 dist[u] + 1.
            if (best != kInfiniteGirth && 2 * dist[u] + 1 >= best) {
                break;
            }
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == kUnseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
        for (Vertex v : queue) {
            dist[v] = kUnseen;
        }
    }
    return best;
}

GraphCertificate certify(const Graph& g) {
    GraphCertificate cert;
    cert.degree = regular_degree(g);
    cert.girth = girth(g);
    cert.k_max = cert.is_forest() ? kInfiniteGirth : cert.girth / 2;
    return cert;
}

int diameter(const Graph& g) {
    const std::size_t n = g.vertex_count();
    int best = 0;
    for (Vertex root = 0; root < n; ++root) {
        const auto ball = distances_within(g, root, static_cast<int>(n));
        if (ball.size() != n) {
            return kInfiniteGirth;
        }
        best = std::max(best, ball.back().distance);
    }
    return best;
}

std::vector<BallEntry> distances_within(const Graph& g, Vertex root, int radius) {
    if (root >= g.vertex_count()) {
        throw DomainError("root " + std::to_string(root) + " out of range for " +
                          std::to_string(g.vertex_count()) + " vertices");
    }
    if (radius < 0) {
        throw DomainError("radius must be >= 0");
    }
    std::vector<BallEntry> ball{{root, 0}};
    // Balls are usually tiny relative to n; a hash set keeps the query
    // independent of the graph size.
    std::unordered_set<Vertex> seen{root};
    for (std::size_t head = 0; head < ball.size(); ++head) {
        const auto [u, du] = ball[head];
        if (du == radius) {
            break;
        }
        for (Vertex w : g.neighbors(u)) {
            if (seen.insert(w).second) {
                ball.push_back({w, du + 1});
            }
        }
    }
    return ball;
}

namespace {

// Unbiased integer in [0, bound) from a 64-bit engine (Lemire's method).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

} // namespace

Graph random_regular(std::size_t n, int degree, int min_girth, std::uint64_t seed, RandomRegularOptions options) {
    if (degree < 1) {
        throw DomainError("degree must be >= 1");
    }
    if ((n * static_cast<std::size_t>(degree)) % 2 != 0) {
        throw DomainError("n * d must be even, got n = " + std::to_string(n) + ", d = " + std::to_string(degree));
    }
    if (n < static_cast<std::size_t>(degree) + 1) {
        throw DomainError("need n >= d + 1, got n = " + std::to_string(n) + ", d = " + std::to_string(degree));
    }

    std::mt19937_64 rng(seed);
    std::vector<Vertex> stubs(n * degree);
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        for (std::size_t i = 0; i < stubs.size(); ++i) {
            stubs[i] = static_cast<Vertex>(i / degree);
        }
        for (std::size_t i = stubs.size(); i > 1; --i) {
            std::swap(stubs[i - 1], stubs[bounded(rng, i)]);
        }
        edges.clear();
        bool simple = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) {
                simple = false;
                break;
            }
            edges.push_back(stubs[i] < stubs[i + 1] ? Edge{stubs[i], stubs[i + 1]} : Edge{stubs[i + 1], stubs[i]});
        }
        if (!simple) {
            continue;
        }
        Graph g(n, edges);
        if (g.edge_count() != edges.size()) {
            continue; // parallel edge collapsed
        }
        if (min_girth > 3 && girth(g) < min_girth) {
            continue;
        }
        return g;
    }
    throw GenerationError("no simple " + std::to_string(degree) + "-regular graph on " + std::to_string(n) +
                          " vertices with girth >= " + std::to_string(min_girth) + " after " +
                          std::to_string(options.max_attempts) + " attempts");
}

} // namespace girthcut
