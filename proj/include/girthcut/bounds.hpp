#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace girthcut {

enum class ProfileKind { Optimal, ClosedForm };

// Performance guarantees for d-regular graphs of girth >= 2k.
struct BoundReport {
    int degree = 0;
    int order = 0;
    ProfileKind profile = ProfileKind::Optimal;
    double sigma_opt = 0.0;   // lambda_min(A_k)
    double sigma_w = 0.0;     // w^T A_k w
    double sigma_bound = 0.0; // -(2 sqrt(d-1)/d) cos(pi/(k+1))
    double xi_ev = 0.0;       // relative expectation of sigma_w
    double xi_ev_opt = 0.0;   // relative expectation of sigma_opt
    std::optional<double> xi_lyons; // k >= 2 only
    double cut_fraction = 0.0;      // arccos(sigma)/pi for the selected profile
    double normalized_value = 0.0;  // c_d for the selected profile

    double selected_sigma() const noexcept { return profile == ProfileKind::Optimal ? sigma_opt : sigma_w; }
};

// sigma / (-2 sqrt(d-1) / d). Expected cut = (m/pi) arccos(-2 b xi).
double relative_expectation(double sigma, int degree);

// Lyons' block-factor relative expectation (k-1)/(k - 1/d). Needs k >= 2.
double lyons_xi(int degree, int order);

// Same quantity written as (1 + (d-1)/(d(k-1)))^-1.
double lyons_xi_reciprocal_form(int degree, int order);

// Degree above which cos(pi/(k+1)) >= 1 - (pi/(k+1))^2/2 already beats the
// Lyons bound: (k - (k-1)/(1 - (pi/(k+1))^2/2))^-1. Needs k >= 3.
double lyons_degree_threshold(int order);

// sqrt(d) (arccos(sigma)/pi - 1/2), so the cut fraction is 1/2 + c_d/sqrt(d).
double normalized_value(int degree, double sigma);

// arccos(sigma)/pi with sigma clamped to [-1, 1].
double cut_fraction(double sigma);

BoundReport bound_report(int degree, int order, ProfileKind profile = ProfileKind::Optimal);

// One closed-form row per (k, d) with k outermost.
std::vector<BoundReport> comparison_table(std::span<const int> degrees, std::span<const int> orders);

// The eight (k, d) pairs of the published comparison: k = 3 with d = 3..9, and k = 4 with d = 3.
std::vector<BoundReport> reference_table();

// Truncates toward zero at `places` decimals. A scaled value within 1e-9
// below the next integer snaps up to it, so 0.7 computed as
// 0.69999999999999996 still renders as 0.70000.
double truncate_decimals(double x, int places);
std::string format_truncated(double x, int places = 5);

// Published large-d normalized values of depth-2 local algorithms, shown
// as annotations only.
inline constexpr double kQaoaNormalizedValue = 0.41;
inline constexpr double kThresholdNormalizedValue = 0.42;

} // namespace girthcut
