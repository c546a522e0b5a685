#include "cli.hpp"

#include "girthcut/bounds.hpp"
#include "girthcut/errors.hpp"
#include "girthcut/graph.hpp"
#include "girthcut/rounding.hpp"
#include "girthcut/solution.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace girthcut::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kTablePlaces = 5;

enum class Format { Text, Json, Csv };

// Bad flag values detected after parsing.
class UsageFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
    if (s == "json") {
        return Format::Json;
    }
    if (s == "csv") {
        return Format::Csv;
    }
    return Format::Text;
}

ProfileKind parse_profile(const std::string& s) {
    return s == "closedform" ? ProfileKind::ClosedForm : ProfileKind::Optimal;
}

const char* profile_name(ProfileKind p) { return p == ProfileKind::Optimal ? "optimal" : "closedform"; }

std::string number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string scalar_text(const Json& v) {
    if (v.is_number_float()) {
        return number(v.get<double>());
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

// Flattens nested objects into dotted keys; arrays of scalars are joined.
void flatten(const Json& node, const std::string& prefix, char separator,
             std::vector<std::pair<std::string, std::string>>& rows) {
    for (const auto& [key, value] : node.items()) {
        const std::string path = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            flatten(value, path, separator, rows);
        } else if (value.is_array()) {
            std::string joined;
            for (const auto& item : value) {
                if (!joined.empty()) {
                    joined += separator;
                }
                joined += scalar_text(item);
            }
            rows.emplace_back(path, joined);
        } else {
            rows.emplace_back(path, scalar_text(value));
        }
    }
}

void emit_record(const Json& record, Format format, std::ostream& out) {
    if (format == Format::Json) {
        out << record.dump(2) << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(record, "", format == Format::Csv ? ';' : ' ', rows);
    if (format == Format::Csv) {
        out << "field,value\n";
        for (const auto& [k, v] : rows) {
            out << k << ',' << v << '\n';
        }
        return;
    }
    std::size_t width = 0;
    for (const auto& row : rows) {
        width = std::max(width, row.first.size());
    }
    for (const auto& [k, v] : rows) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << (k + ":") << v << '\n';
    }
}

Json optional_number(std::optional<double> v) { return v ? Json(*v) : Json(nullptr); }

Json girth_json(int g) { return g == kInfiniteGirth ? Json(nullptr) : Json(g); }

// ---------------------------------------------------------------- bound

struct BoundArgs {
    int d = 0;
    int k = 0;
    std::string profile = "optimal";
    std::string format = "text";
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
    if (a.d < 3) {
        throw UsageFailure("--d must be >= 3, got " + std::to_string(a.d));
    }
    if (a.k < 1) {
        throw UsageFailure("--k must be >= 1, got " + std::to_string(a.k));
    }
    const BoundReport r = bound_report(a.d, a.k, parse_profile(a.profile));

    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "bound";
    j["d"] = r.degree;
    j["k"] = r.order;
    j["profile"] = profile_name(r.profile);
    j["sigma_opt"] = r.sigma_opt;
    j["sigma_w"] = r.sigma_w;
    j["sigma_cos_bound"] = r.sigma_bound;
    j["cut_fraction"] = r.cut_fraction;
    j["cut_fraction_closed_form"] = cut_fraction(r.sigma_w);
    j["xi_ev"] = truncate_decimals(r.xi_ev, kTablePlaces);
    j["xi_lyons"] = r.xi_lyons ? Json(truncate_decimals(*r.xi_lyons, kTablePlaces)) : Json(nullptr);
    j["xi_ev_exact"] = r.xi_ev;
    j["xi_ev_opt"] = r.xi_ev_opt;
    j["xi_lyons_exact"] = optional_number(r.xi_lyons);
    j["normalized_value"] = r.normalized_value;
    j["annotations"] = {{"qaoa_depth2_c_inf", kQaoaNormalizedValue},
                        {"threshold_depth2_c_inf", kThresholdNormalizedValue}};
    emit_record(j, parse_format(a.format), out);
    return kOk;
}

// ---------------------------------------------------------------- table

struct TableArgs {
    std::string k_list;
    std::string d_list;
    std::string format = "text";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
    std::vector<BoundReport> rows;
    if (a.k_list.empty() && a.d_list.empty()) {
        rows = reference_table();
    } else if (a.k_list.empty() || a.d_list.empty()) {
        throw UsageFailure("--k and --d must be given together");
    } else {
        std::vector<int> ks;
        std::vector<int> ds;
        try {
            ks = parse_int_list(a.k_list);
            ds = parse_int_list(a.d_list);
        } catch (const std::invalid_argument& e) {
            throw UsageFailure(e.what());
        }
        for (int k : ks) {
            if (k < 2) {
                throw UsageFailure("table needs k >= 2, got " + std::to_string(k));
            }
        }
        for (int d : ds) {
            if (d < 3) {
                throw UsageFailure("table needs d >= 3, got " + std::to_string(d));
            }
        }
        rows = comparison_table(ds, ks);
    }

    switch (parse_format(a.format)) {
    case Format::Json: {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "table";
        j["truncation_places"] = kTablePlaces;
        Json list = Json::array();
        for (const auto& r : rows) {
            list.push_back({{"k", r.order},
                            {"d", r.degree},
                            {"xi_ev", truncate_decimals(r.xi_ev, kTablePlaces)},
                            {"xi_lyons", truncate_decimals(*r.xi_lyons, kTablePlaces)}});
        }
        j["rows"] = std::move(list);
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "k,d,xi_ev,xi_lyons\n";
        for (const auto& r : rows) {
            out << r.order << ',' << r.degree << ',' << format_truncated(r.xi_ev) << ','
                << format_truncated(*r.xi_lyons) << '\n';
        }
        break;
    case Format::Text:
        out << std::setw(3) << "k" << std::setw(5) << "d" << std::setw(10) << "explicit" << std::setw(10)
            << "lyons" << '\n';
        for (const auto& r : rows) {
            out << std::setw(3) << r.order << std::setw(5) << r.degree << std::setw(10) << format_truncated(r.xi_ev)
                << std::setw(10) << format_truncated(*r.xi_lyons) << '\n';
        }
        out << "(relative expectation from w^T A_k w; values truncated to " << kTablePlaces << " decimals)\n";
        break;
    }
    return kOk;
}

// ---------------------------------------------------------------- graphs

struct GraphSource {
    std::string path;
    std::string builtin_name;
};

void require_one_source(const GraphSource& src) {
    if (src.path.empty() == src.builtin_name.empty()) {
        throw UsageFailure("exactly one of --graph PATH or --builtin NAME is required");
    }
}

Graph load(const GraphSource& src) {
    return src.path.empty() ? builtin(src.builtin_name) : load_edge_list_file(src.path);
}

std::string source_label(const GraphSource& src) {
    return src.path.empty() ? "builtin:" + src.builtin_name : "file:" + src.path;
}

struct GraphInfoArgs {
    GraphSource source;
    std::string format = "text";
};

int cmd_graph_info(const GraphInfoArgs& a, std::ostream& out) {
    require_one_source(a.source);
    const Graph g = load(a.source);

    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "graph-info";
    j["source"] = source_label(a.source);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    std::size_t lo = g.vertex_count() ? g.degree(0) : 0;
    std::size_t hi = lo;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    j["regular"] = g.vertex_count() > 0 && lo == hi;
    j["min_degree"] = lo;
    j["max_degree"] = hi;
    const int gi = girth(g);
    j["girth"] = girth_json(gi);
    j["k_max"] = gi == kInfiniteGirth ? Json(nullptr) : Json(gi / 2);
    const int diam = g.vertex_count() ? diameter(g) : 0;
    j["diameter"] = diam == kInfiniteGirth ? Json(nullptr) : Json(diam);
    emit_record(j, parse_format(a.format), out);
    return kOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
    GraphSource source;
    int k = 0;
    std::string profile = "optimal";
    std::string mode = "strict";
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    std::string format = "text";
};

int cmd_solve(const SolveArgs& a, const Environment& env, std::ostream& out) {
    require_one_source(a.source);
    if (a.k < 1) {
        throw UsageFailure("--k must be >= 1, got " + std::to_string(a.k));
    }
    if (a.samples < 1) {
        throw UsageFailure("--samples must be >= 1");
    }
    const ProfileKind kind = parse_profile(a.profile);
    if (kind == ProfileKind::ClosedForm && a.k < 2) {
        throw UsageFailure("--profile closedform needs k >= 2");
    }
    const Mode mode = a.mode == "practical" ? Mode::Practical : Mode::Strict;

    const Graph g = load(a.source);
    const int d = regular_degree(g);
    if (d < 3) {
        throw CertificationError("degree " + std::to_string(d) + " < 3");
    }
    const CoefficientProfile profile = kind == ProfileKind::Optimal ? optimal_profile(d, a.k) : closed_form_profile(d, a.k);
    const VectorSolution solution = build_vectors(g, profile, mode);
    const int gi = girth(g);

    const double expected = expected_cut_exact(solution);
    const RoundingReport mc = monte_carlo(solution, a.samples, a.seed, {env.threads});

    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "solve";
    j["graph"] = {{"source", source_label(a.source)},
                  {"n", g.vertex_count()},
                  {"m", g.edge_count()},
                  {"degree", d},
                  {"girth", girth_json(gi)}};
    j["k"] = a.k;
    j["profile"] = profile_name(kind);
    j["mode"] = mode == Mode::Strict ? "strict" : "practical";
    j["alphas"] = profile.alphas;
    // Practical-mode edge products differ from the profile value.
    j[mode == Mode::Strict ? "sigma" : "profile_sigma"] = profile.sigma;
    j["sdp_objective"] = sdp_objective(solution);
    j["expected_cut"] = expected;
    j["expected_fraction"] = g.edge_count() ? expected / static_cast<double>(g.edge_count()) : 0.0;
    std::string assignment;
    for (auto bit : mc.best.assignment) {
        assignment += bit ? '1' : '0';
    }
    j["monte_carlo"] = {{"samples", mc.samples},
                        {"seed", mc.seed},
                        {"mean_fraction", mc.mean_fraction},
                        {"std_error", mc.std_error},
                        {"best_cut", mc.best.size},
                        {"best_sample", mc.best_sample},
                        {"best_assignment", assignment}};
    if (mode == Mode::Practical) {
        Json products = Json::object();
        const auto& edges = g.edges();
        const auto values = solution.edge_products();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            products[std::to_string(edges[e].u) + "-" + std::to_string(edges[e].v)] = values[e];
        }
        j["edge_products"] = std::move(products);
    }
    emit_record(j, parse_format(a.format), out);
    return kOk;
}

void add_format(CLI::App* app, std::string& format) {
    app->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
}

void add_source(CLI::App* app, GraphSource& src) {
    auto* path = app->add_option("--graph", src.path, "edge-list file (0-based 'u v' pairs)");
    auto* name = app->add_option("--builtin", src.builtin_name,
                                 "petersen | heawood | pappus | mcgee | tutte_coxeter");
    path->excludes(name);
}

} // namespace

Environment environment_from_process(std::string* error) {
    Environment env;
    const char* raw = std::getenv("GIRTHCUT_THREADS");
    if (raw == nullptr || *raw == '\0') {
        return env;
    }
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 1) {
        if (error) {
            *error = std::string("ignoring GIRTHCUT_THREADS='") + raw + "': expected a positive integer";
        }
        return env;
    }
    env.threads = static_cast<unsigned>(std::min<long>(value, 1024));
    return env;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer '" + s + "' in '" + text + "'");
        }
        if (used != s.size()) {
            throw std::invalid_argument("malformed integer '" + s + "' in '" + text + "'");
        }
        return v;
    };
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            values.push_back(to_int(item));
            continue;
        }
        const int lo = to_int(item.substr(0, dots));
        const int hi = to_int(item.substr(dots + 2));
        if (hi < lo) {
            throw std::invalid_argument("empty range '" + item + "'");
        }
        for (int v = lo; v <= hi; ++v) {
            values.push_back(v);
        }
    }
    if (values.empty()) {
        throw std::invalid_argument("empty list '" + text + "'");
    }
    return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app{"Explicit SDP vectors and hyperplane rounding for MaxCut on high-girth regular graphs", "girthcut"};
    app.require_subcommand(1);

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "closed-form and spectral guarantees for (d, k)");
    bound->add_option("--d", bound_args.d, "graph degree (>= 3)")->required();
    bound->add_option("--k", bound_args.k, "radius parameter; girth >= 2k (>= 1)")->required();
    bound->add_option("--profile", bound_args.profile, "coefficient profile")
        ->check(CLI::IsMember({"optimal", "closedform"}))
        ->capture_default_str();
    add_format(bound, bound_args.format);

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "relative expectation against the Lyons bound");
    table->add_option("--k", table_args.k_list, "k values, e.g. 3 or 3,4 or 3..5");
    table->add_option("--d", table_args.d_list, "d values, e.g. 3..9");
    add_format(table, table_args.format);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "build the vector solution on a graph and round it");
    add_source(solve, solve_args.source);
    solve->add_option("--k", solve_args.k, "radius parameter (>= 1)")->required();
    solve->add_option("--profile", solve_args.profile, "coefficient profile")
        ->check(CLI::IsMember({"optimal", "closedform"}))
        ->capture_default_str();
    solve->add_option("--mode", solve_args.mode, "strict needs girth >= 2k; practical renormalizes")
        ->check(CLI::IsMember({"strict", "practical"}))
        ->capture_default_str();
    solve->add_option("--samples", solve_args.samples, "Monte Carlo rounds")->capture_default_str();
    solve->add_option("--seed", solve_args.seed, "sampler seed")->capture_default_str();
    add_format(solve, solve_args.format);

    GraphInfoArgs info_args;
    auto* info = app.add_subcommand("graph-info", "size, regularity, girth and diameter of a graph");
    add_source(info, info_args.source);
    add_format(info, info_args.format);

    std::vector<std::string> storage{"girthcut"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*bound) {
            return cmd_bound(bound_args, out);
        }
        if (*table) {
            return cmd_table(table_args, out);
        }
        if (*solve) {
            return cmd_solve(solve_args, env, out);
        }
        if (*info) {
            return cmd_graph_info(info_args, out);
        }
    } catch (const UsageFailure& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const LookupError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const CertificationError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return kPrecondition;
    } catch (const IngestionError& e) {
        err << "ingestion error: " << e.what() << '\n';
        return kIngestion;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

} // namespace girthcut::cli
