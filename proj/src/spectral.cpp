#include "girthcut/spectral.hpp"

#include "girthcut/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace girthcut {

namespace {

constexpr double kEigenvalueTolerance = 1e-14;
constexpr double kResidualTarget = 1e-13;
constexpr int kMinInverseIterations = 2;
constexpr int kMaxInverseIterations = 8;

void require_degree(int degree) {
    if (degree < 3) {
        throw DomainError("degree must be >= 3, got " + std::to_string(degree));
    }
}

void require_order(int order, int minimum) {
    if (order < minimum) {
        throw DomainError("order k must be >= " + std::to_string(minimum) + ", got " +
                          std::to_string(order));
    }
}

double max_coupling(const PathOperator& op) {
    double m = 0.0;
    for (int i = 0; i + 1 < op.order(); ++i) {
        m = std::max(m, std::abs(op.coupling(i)));
    }
    return m;
}

double residual_inf(const PathOperator& op, double lambda, std::span<const double> x) {
    const auto mx = op.apply(x);
    double r = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        r = std::max(r, std::abs(mx[i] - lambda * x[i]));
    }
    return r;
}

void normalize(std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    const double inv = 1.0 / std::sqrt(s);
    for (double& v : x) {
        v *= inv;
    }
}

// Solves (M - shift I) y = rhs in place using Gaussian elimination with
// partial pivoting on the tridiagonal band. Zero pivots are replaced by a
// tiny value so the solve stays finite when shift is an exact eigenvalue.
void shifted_solve(const PathOperator& op, double shift, std::vector<double>& rhs) {
    const int n = op.order();
    std::vector<double> diag(n, -shift);
    std::vector<double> sub(std::max(n - 1, 0));
    std::vector<double> sup(std::max(n - 1, 0));
    std::vector<double> sup2(std::max(n - 2, 0), 0.0);
    std::vector<bool> swapped(std::max(n - 1, 0), false);
    for (int i = 0; i + 1 < n; ++i) {
        sub[i] = op.coupling(i);
        sup[i] = op.coupling(i);
    }

    const double tiny = std::numeric_limits<double>::epsilon() * std::max(1.0, max_coupling(op));

    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(diag[i]) >= std::abs(sub[i])) {
            if (diag[i] == 0.0) {
                diag[i] = tiny;
            }
            const double factor = sub[i] / diag[i];
            sub[i] = factor;
            diag[i + 1] -= factor * sup[i];
        } else {
            const double factor = diag[i] / sub[i];
            diag[i] = sub[i];
            sub[i] = factor;
            const double upper = sup[i];
            sup[i] = diag[i + 1];
            diag[i + 1] = upper - factor * diag[i + 1];
            if (i + 2 < n) {
                sup2[i] = sup[i + 1];
                sup[i + 1] = -factor * sup[i + 1];
            }
            swapped[i] = true;
        }
    }
    if (diag[n - 1] == 0.0) {
        diag[n - 1] = tiny;
    }

    for (int i = 0; i + 1 < n; ++i) {
        if (swapped[i]) {
            const double t = rhs[i];
            rhs[i] = rhs[i + 1];
            rhs[i + 1] = t - sub[i] * rhs[i];
        } else {
            rhs[i + 1] -= sub[i] * rhs[i];
        }
    }

    rhs[n - 1] /= diag[n - 1];
    if (n >= 2) {
        rhs[n - 2] = (rhs[n - 2] - sup[n - 2] * rhs[n - 1]) / diag[n - 2];
    }
    for (int i = n - 3; i >= 0; --i) {
        rhs[i] = (rhs[i] - sup[i] * rhs[i + 1] - sup2[i] * rhs[i + 2]) / diag[i];
    }
}

void fix_sign(std::vector<double>& x) {
    double scale = 0.0;
    for (double v : x) {
        scale = std::max(scale, std::abs(v));
    }
    const double threshold = 16.0 * std::numeric_limits<double>::epsilon() * scale;
    for (double v : x) {
        if (std::abs(v) > threshold) {
            if (v < 0.0) {
                for (double& u : x) {
                    u = -u;
                }
            }
            return;
        }
    }
}

} // namespace

PathOperator::PathOperator(int degree, int order, PathVariant variant)
    : degree_(degree), order_(order), variant_(variant) {
    require_degree(degree);
    require_order(order, 1);
    a_ = 1.0 / std::sqrt(static_cast<double>(degree));
    b_ = std::sqrt(static_cast<double>(degree - 1)) / degree;
}

std::vector<double> PathOperator::apply(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(order_)) {
        throw DomainError("vector length " + std::to_string(x.size()) + " does not match order " +
                          std::to_string(order_));
    }
    std::vector<double> y(x.size(), 0.0);
    for (int i = 0; i + 1 < order_; ++i) {
        const double c = coupling(i);
        y[i] += c * x[i + 1];
        y[i + 1] += c * x[i];
    }
    return y;
}

int count_eigenvalues_below(const PathOperator& op, double x) {
    // LDL^T pivots of (M - x I); the number of negative pivots is the
    // number of eigenvalues below x.
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_coupling(op));
    int count = 0;
    double q = -x;
    for (int i = 0;; ++i) {
        if (std::abs(q) < pivmin) {
            q = -pivmin;
        }
        if (q < 0.0) {
            ++count;
        }
        if (i + 1 >= op.order()) {
            break;
        }
        const double c = op.coupling(i);
        q = -x - c * c / q;
    }
    return count;
}

Eigenpair min_eigenpair(const PathOperator& op) {
    const int n = op.order();
    if (n == 1) {
        return {0.0, {1.0}};
    }

    // Gershgorin: every eigenvalue lies in [-2 max|c|, 2 max|c|]. The trace
    // is zero, so the smallest one is <= 0.
    double lo = -2.0 * max_coupling(op);
    double hi = 0.0;
    for (int it = 0; it < 200 && hi - lo > kEigenvalueTolerance; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (count_eigenvalues_below(op, mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // The lower end of the bracket never exceeds the true eigenvalue, so
    // lambda <= x^T M x holds for every unit x, including the exact
    // eigenvector when k = 2.
    const double lambda = lo;

    // Fixed pseudo-random start: irregular enough to overlap the target
    // eigenvector, reproducible across standard libraries.
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = 0.5 + static_cast<double>((i * 7919 + 104729) % 1009) / 1009.0;
    }
    normalize(x);

    for (int it = 0; it < kMaxInverseIterations; ++it) {
        shifted_solve(op, lambda, x);
        normalize(x);
        if (it + 1 >= kMinInverseIterations && residual_inf(op, lambda, x) <= kResidualTarget) {
            break;
        }
    }
    fix_sign(x);
    return {lambda, std::move(x)};
}

double b_min_eigenvalue(const PathOperator& op) {
    if (op.variant() != PathVariant::B) {
        throw UsageError("closed-form minimum eigenvalue applies only to the Toeplitz (B) variant");
    }
    const double k = op.order();
    return 2.0 * op.b() * std::cos(k * std::numbers::pi / (k + 1.0));
}

std::vector<double> closed_form_w(int order) {
    require_order(order, 1);
    const double k = order;
    const double scale = std::sqrt(2.0 / (k + 1.0));
    std::vector<double> w(order);
    for (int l = 0; l < order; ++l) {
        w[l] = scale * std::sin((l + 1.0) * k * std::numbers::pi / (k + 1.0));
    }
    return w;
}

double quadratic_form(const PathOperator& op, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(op.order())) {
        throw DomainError("vector length " + std::to_string(x.size()) + " does not match order " +
                          std::to_string(op.order()));
    }
    double s = 0.0;
    for (int i = 0; i + 1 < op.order(); ++i) {
        s += op.coupling(i) * x[i] * x[i + 1];
    }
    return 2.0 * s;
}

double sigma_closed_form(int degree, int order) {
    require_degree(degree);
    require_order(order, 2);
    const double d = degree;
    const double theta = std::numbers::pi / (order + 1.0);
    const double correction =
        (std::sqrt(d / (d - 1.0)) - 1.0) * (2.0 / (order + 1.0)) * std::sin(theta) * std::sin(2.0 * theta);
    return -(2.0 * std::sqrt(d - 1.0) / d) * (std::cos(theta) + correction);
}

double sigma_cosine_bound(int degree, int order) {
    require_degree(degree);
    require_order(order, 1);
    const double d = degree;
    return -(2.0 * std::sqrt(d - 1.0) / d) * std::cos(std::numbers::pi / (order + 1.0));
}

double shell_size(int degree, int distance) {
    if (distance == 0) {
        return 1.0;
    }
    return degree * std::pow(static_cast<double>(degree - 1), distance - 1);
}

CoefficientProfile beta_to_alpha(std::span<const double> beta, int degree) {
    require_degree(degree);
    if (beta.empty()) {
        throw DomainError("beta must be nonempty");
    }
    double norm2 = 0.0;
    for (double v : beta) {
        norm2 += v * v;
    }
    const double norm = std::sqrt(norm2);
    if (!(std::abs(norm - 1.0) <= 1e-10)) {
        throw DomainError("beta must have unit norm, got |beta| = " + std::to_string(norm));
    }

    std::vector<double> unit(beta.begin(), beta.end());
    for (double& v : unit) {
        v /= norm;
    }

    CoefficientProfile profile;
    profile.order = static_cast<int>(unit.size());
    profile.degree = degree;
    profile.alphas.resize(unit.size());
    for (int l = 0; l < profile.order; ++l) {
        profile.alphas[l] = unit[l] / std::sqrt(shell_size(degree, l));
    }
    profile.sigma = quadratic_form(PathOperator(degree, profile.order, PathVariant::A), unit);
    return profile;
}

} // namespace girthcut
