#include "girthcut/bounds.hpp"

#include "girthcut/errors.hpp"
#include "girthcut/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace girthcut {

namespace {

void require_degree(int degree) {
    if (degree < 3) {
        throw DomainError("degree must be >= 3, got " + std::to_string(degree));
    }
}

long long scaled_truncation(double x, int places) {
    const double scaled = std::abs(x) * std::pow(10.0, places);
    return static_cast<long long>(std::floor(scaled + 1e-9));
}

} // namespace

double relative_expectation(double sigma, int degree) {
    require_degree(degree);
    const double d = degree;
    return sigma / (-2.0 * std::sqrt(d - 1.0) / d);
}

double lyons_xi(int degree, int order) {
    require_degree(degree);
    if (order < 2) {
        throw DomainError("Lyons bound needs k >= 2, got " + std::to_string(order));
    }
    return (order - 1.0) / (order - 1.0 / degree);
}

double lyons_xi_reciprocal_form(int degree, int order) {
    require_degree(degree);
    if (order < 2) {
        throw DomainError("Lyons bound needs k >= 2, got " + std::to_string(order));
    }
    const double d = degree;
    return 1.0 / (1.0 + (d - 1.0) / (d * (order - 1.0)));
}

double lyons_degree_threshold(int order) {
    if (order < 3) {
        throw DomainError("degree threshold needs k >= 3, got " + std::to_string(order));
    }
    const double theta = std::numbers::pi / (order + 1.0);
    const double cosine_lower = 1.0 - 0.5 * theta * theta;
    return 1.0 / (order - (order - 1.0) / cosine_lower);
}

double cut_fraction(double sigma) { return std::acos(std::clamp(sigma, -1.0, 1.0)) / std::numbers::pi; }

double normalized_value(int degree, double sigma) {
    require_degree(degree);
    return std::sqrt(static_cast<double>(degree)) * (cut_fraction(sigma) - 0.5);
}

BoundReport bound_report(int degree, int order, ProfileKind profile) {
    require_degree(degree);
    if (order < 1) {
        throw DomainError("order k must be >= 1, got " + std::to_string(order));
    }
    BoundReport r;
    r.degree = degree;
    r.order = order;
    r.profile = profile;
    r.sigma_opt = min_eigenpair(PathOperator(degree, order)).value;
    r.sigma_w = quadratic_form(PathOperator(degree, order), closed_form_w(order));
    r.sigma_bound = sigma_cosine_bound(degree, order);
    r.xi_ev = relative_expectation(r.sigma_w, degree);
    r.xi_ev_opt = relative_expectation(r.sigma_opt, degree);
    if (order >= 2) {
        r.xi_lyons = lyons_xi(degree, order);
    }
    r.cut_fraction = cut_fraction(r.selected_sigma());
    r.normalized_value = normalized_value(degree, r.selected_sigma());
    return r;
}

std::vector<BoundReport> comparison_table(std::span<const int> degrees, std::span<const int> orders) {
    if (degrees.empty() || orders.empty()) {
        throw DomainError("comparison table needs nonempty degree and order ranges");
    }
    std::vector<BoundReport> rows;
    rows.reserve(degrees.size() * orders.size());
    for (int k : orders) {
        for (int d : degrees) {
            rows.push_back(bound_report(d, k, ProfileKind::ClosedForm));
        }
    }
    return rows;
}

std::vector<BoundReport> reference_table() {
    constexpr int kDegrees[] = {3, 4, 5, 6, 7, 8, 9};
    constexpr int kOrder3[] = {3};
    constexpr int kDegree3[] = {3};
    constexpr int kOrder4[] = {4};
    auto rows = comparison_table(kDegrees, kOrder3);
    const auto tail = comparison_table(kDegree3, kOrder4);
    rows.insert(rows.end(), tail.begin(), tail.end());
    return rows;
}

double truncate_decimals(double x, int places) {
    const double magnitude = static_cast<double>(scaled_truncation(x, places)) / std::pow(10.0, places);
    return x < 0 ? -magnitude : magnitude;
}

std::string format_truncated(double x, int places) {
    const long long t = scaled_truncation(x, places);
    std::string digits = std::to_string(t);
    if (digits.size() <= static_cast<std::size_t>(places)) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    std::string out = (x < 0 && t != 0) ? "-" : "";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

} // namespace girthcut
