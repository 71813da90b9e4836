#include "brimsim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "brimsim/coupling.hpp"
#include "brimsim/errors.hpp"

namespace brimsim {

Graph::Graph(std::uint32_t n, std::vector<Edge> edges) : n_(n) {
    if (n == 0) throw ContractViolation("graph needs at least one vertex");
    for (auto& e : edges) {
        if (e.i == e.j)
            throw ContractViolation("self-loop on vertex " + std::to_string(e.i));
        if (e.i > e.j) std::swap(e.i, e.j);
        if (e.j >= n)
            throw ContractViolation("edge endpoint " + std::to_string(e.j) +
                                    " out of range for n=" + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
    // merge duplicates by summation
    edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (!edges_.empty() && edges_.back().i == e.i && edges_.back().j == e.j)
            edges_.back().w += e.w;
        else
            edges_.push_back(e);
    }
}

double Graph::total_weight() const noexcept {
    double sum = 0.0;
    for (const auto& e : edges_) sum += e.w;
    return sum;
}

double Graph::max_abs_weight() const noexcept {
    double m = 0.0;
    for (const auto& e : edges_) m = std::max(m, std::abs(e.w));
    return m;
}

bool Graph::integer_weights() const noexcept {
    for (const auto& e : edges_)
        if (e.w != std::floor(e.w)) return false;
    return true;
}

namespace {

void check_spins(const SpinVector& s, std::size_t n) {
    if (s.size() != n)
        throw ContractViolation("spin vector length " + std::to_string(s.size()) +
                                " does not match n=" + std::to_string(n));
    for (int v : s)
        if (v != 1 && v != -1) throw ContractViolation("spin entries must be +1 or -1");
}

} // namespace

double cut_value(const Graph& g, const SpinVector& s) {
    check_spins(s, g.n());
    double sum = 0.0;
    for (const auto& e : g.edges())
        if (s[e.i] != s[e.j]) sum += e.w;
    return sum;
}

double ising_energy(const CouplingMatrix& j, const SpinVector& s) {
    check_spins(s, j.n());
    double h = 0.0;
    for (std::uint32_t a = 0; a < j.n(); ++a)
        for (std::uint32_t b = a + 1; b < j.n(); ++b) h -= j(a, b) * s[a] * s[b];
    return h;
}

CouplingMatrix maxcut_to_ising(const Graph& g) {
    CouplingMatrix j(g.n());
    for (const auto& e : g.edges()) j.set_symmetric(e.i, e.j, -e.w);
    return j;
}

} // namespace brimsim
