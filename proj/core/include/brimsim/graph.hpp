#pragma once

#include <cstdint>
#include <vector>

namespace brimsim {

/// One undirected weighted edge. Stored canonically with i < j.
struct Edge {
    std::uint32_t i;
    std::uint32_t j;
    double w;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted undirected graph, the Max-Cut problem instance.
///
/// Invariants (enforced by the constructor):
///   - 0 <= i < j < n for every stored edge, so no self-loops,
///   - at most one edge per unordered pair; duplicates merge by summing
///     their weights,
///   - n >= 1.
class Graph {
public:
    /// Builds a graph from an arbitrary edge list. Edges may appear in any
    /// vertex order and may repeat; they are canonicalized and merged.
    /// Throws ContractViolation on self-loops or out-of-range endpoints.
    Graph(std::uint32_t n, std::vector<Edge> edges);

    explicit Graph(std::uint32_t n) : Graph(n, {}) {}

    std::uint32_t n() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Sum of all edge weights (the constant in the cut/energy identity).
    double total_weight() const noexcept;

    /// Largest |w| over all edges, 0 for an empty edge set.
    double max_abs_weight() const noexcept;

    /// True when every weight is integer-valued.
    bool integer_weights() const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::uint32_t n_;
    std::vector<Edge> edges_; // sorted by (i, j)
};

/// Spins are +1/-1 per vertex.
using SpinVector = std::vector<int>;

/// Sum of W_ij over edges whose endpoints lie on opposite sides.
/// Throws ContractViolation when the spin vector length differs from n
/// or an entry is not +1/-1.
double cut_value(const Graph& g, const SpinVector& s);

class CouplingMatrix;

/// Ising Hamiltonian H = -sum_{i<j} J_ij s_i s_j.
double ising_energy(const CouplingMatrix& j, const SpinVector& s);

/// The Max-Cut -> Ising mapping J = -W (zero diagonal, symmetric).
CouplingMatrix maxcut_to_ising(const Graph& g);

} // namespace brimsim
