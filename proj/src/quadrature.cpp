#include "frd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "frd/errors.hpp"

namespace frd::quad {

namespace {

GLRule build_rule(int n) {
    // Newton on P_n with the Chebyshev-like initial guess; standard recurrence.
    GLRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            double dp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        p0 = 1.0;
        p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        double dp = n * (x * p0 - p1) / (x * x - 1.0);
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

std::mutex g_rule_mutex;
std::map<int, GLRule> g_rules;

} // namespace

const GLRule& gl_rule(int n) {
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto it = g_rules.find(n);
    if (it == g_rules.end()) it = g_rules.emplace(n, build_rule(n)).first;
    return it->second;
}

void composite_nodes(std::span<const double> edges, int order,
                     std::vector<double>& nodes, std::vector<double>& weights) {
    const GLRule& rule = gl_rule(order);
    nodes.clear();
    weights.clear();
    if (edges.size() < 2) return;
    nodes.reserve((edges.size() - 1) * order);
    weights.reserve((edges.size() - 1) * order);
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
        double a = edges[p], b = edges[p + 1];
        double c = 0.5 * (a + b), h = 0.5 * (b - a);
        for (int i = 0; i < order; ++i) {
            nodes.push_back(c + h * rule.nodes[i]);
            weights.push_back(h * rule.weights[i]);
        }
    }
}

std::vector<double> uniform_edges(double a, double b, int m) {
    std::vector<double> e(m + 1);
    for (int i = 0; i <= m; ++i) e[i] = a + (b - a) * i / m;
    return e;
}

std::vector<double> graded_edges_toward_a(double a, double b, int levels, double ratio) {
    std::vector<double> e;
    e.push_back(b);
    double w = b - a;
    for (int j = 1; j <= levels; ++j) e.push_back(a + w * std::pow(ratio, j));
    e.push_back(a);
    std::reverse(e.begin(), e.end());
    return e;
}

std::complex<double> adaptive_gl(const std::function<std::complex<double>(double)>& f,
                                 double a, double b, double rel_tol,
                                 int order, int initial_panels,
                                 int max_doublings, double* est_err) {
    int m = initial_panels;
    std::vector<double> nodes, weights;
    std::complex<double> prev = 0.0, cur = 0.0;
    double diff = 0.0;
    for (int pass = 0; pass <= max_doublings; ++pass) {
        composite_nodes(uniform_edges(a, b, m), order, nodes, weights);
        cur = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) cur += weights[i] * f(nodes[i]);
        if (pass > 0) {
            diff = std::abs(cur - prev);
            if (diff <= rel_tol * (1.0 + std::abs(cur))) {
                if (est_err) *est_err = diff;
                return cur;
            }
        }
        prev = cur;
        m *= 2;
    }
    if (est_err) {
        *est_err = diff;
        return cur;
    }
    throw QuadratureFailure("adaptive_gl: no convergence after panel doublings");
}

} // namespace frd::quad
