#pragma once

#include <span>
#include <vector>

namespace girthcut {

enum class PathVariant { A, B };

/**
 * The k x k hollow symmetric tridiagonal "path" matrix for degree d.
 *
 * Variant A couples entries 0 and 1 with a = 1/sqrt(d) and every later pair
 * with b = sqrt(d-1)/d. Variant B is the Toeplitz matrix with b everywhere.
 * The minimum of beta^T A beta over the unit sphere is the smallest edge
 * inner product reachable by radial vector assignments on a d-regular graph
 * of girth >= 2k.
 */
class PathOperator {
public:
    // Throws DomainError unless degree >= 3 and order >= 1.
    PathOperator(int degree, int order, PathVariant variant = PathVariant::A);

    int degree() const noexcept { return degree_; }
    int order() const noexcept { return order_; }
    PathVariant variant() const noexcept { return variant_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    // Entry (i, i+1) for 0 <= i < order-1.
    double coupling(int i) const noexcept { return (i == 0 && variant_ == PathVariant::A) ? a_ : b_; }

    // y = M x. Throws DomainError on length mismatch.
    std::vector<double> apply(std::span<const double> x) const;

private:
    int degree_;
    int order_;
    PathVariant variant_;
    double a_;
    double b_;
};

inline PathOperator path_operator(int degree, int order, PathVariant variant = PathVariant::A) {
    return PathOperator(degree, order, variant);
}

struct Eigenpair {
    double value = 0.0;
    std::vector<double> vector;
};

// Smallest eigenvalue by Sturm-count bisection, eigenvector by inverse
// iteration. The vector has unit norm and its first nonzero entry is positive.
Eigenpair min_eigenpair(const PathOperator& op);

// Number of eigenvalues strictly below x (Sturm sequence sign count).
int count_eigenvalues_below(const PathOperator& op, double x);

// 2 b cos(k pi / (k+1)). Throws UsageError for variant A.
double b_min_eigenvalue(const PathOperator& op);

// w_l = sqrt(2/(k+1)) sin((l+1) k pi / (k+1)), the minimum eigenvector of B_k.
std::vector<double> closed_form_w(int order);

// x^T M x through the tridiagonal structure.
double quadratic_form(const PathOperator& op, std::span<const double> x);

// Closed-form value of w^T A_k w:
//   -(2 sqrt(d-1)/d) (cos(pi/(k+1)) + (sqrt(d/(d-1)) - 1) (2/(k+1)) sin(pi/(k+1)) sin(2 pi/(k+1)))
double sigma_closed_form(int degree, int order);

// -(2 sqrt(d-1)/d) cos(pi/(k+1)), the strict upper bound on sigma_closed_form.
double sigma_cosine_bound(int degree, int order);

/// Radial coefficients alpha_0..alpha_{k-1}: a vertex vector has entry
/// alpha_l at every vertex at distance l < k and zero elsewhere.
struct CoefficientProfile {
    int order = 0;
    int degree = 0;
    std::vector<double> alphas;
    /// Common edge inner product on graphs of girth >= 2k.
    double sigma = 0.0;
};

// alpha_0 = beta_0, alpha_l = beta_l / sqrt(d (d-1)^(l-1)). sigma is
// beta^T A_k beta. Throws DomainError if |beta| differs from 1 by more than 1e-10.
CoefficientProfile beta_to_alpha(std::span<const double> beta, int degree);

// Number of vertices at distance exactly l from a vertex of a d-regular
// graph whose radius-l ball is a tree: 1 for l = 0, d (d-1)^(l-1) otherwise.
double shell_size(int degree, int distance);

} // namespace girthcut
