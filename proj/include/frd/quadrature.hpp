#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace frd::quad {

struct GLRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre rule of order n (cached, thread-safe).
const GLRule& gl_rule(int n);

/// Nodes/weights of a composite rule over explicit panel edges.
void composite_nodes(std::span<const double> edges, int order,
                     std::vector<double>& nodes, std::vector<double>& weights);

/// Panel edges [a, b] split into m equal panels.
std::vector<double> uniform_edges(double a, double b, int m);

/// Panel edges [a, b] graded geometrically toward the endpoint `a`:
/// first panel has width (b-a)*ratio^(levels), each next one grows by 1/ratio.
std::vector<double> graded_edges_toward_a(double a, double b, int levels, double ratio = 0.5);

/// Integrate f over [a, b] with composite GL of given order and panel count,
/// doubling panels until two successive answers agree to rel_tol (or cap).
std::complex<double> adaptive_gl(const std::function<std::complex<double>(double)>& f,
                                 double a, double b, double rel_tol,
                                 int order = 12, int initial_panels = 4,
                                 int max_doublings = 12, double* est_err = nullptr);

} // namespace frd::quad
