#include "brimsim/brute_force.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "brimsim/errors.hpp"

namespace brimsim {

namespace {

// Spin assignment encoding: bit b of a mask holds vertex b+1, bit set means
// spin -1. Vertex 0 is pinned to +1 (global-flip symmetry halves the space).

struct Candidate {
    double cut = 0.0;
    std::uint64_t mask = 0;
    bool valid = false;
};

// Lexicographic order on spin vectors with +1 before -1: the first vertex
// where the masks differ decides, and the mask holding spin +1 (bit 0) wins.
bool lex_before(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & -diff)) == 0;
}

void consider(Candidate& best, double cut, std::uint64_t mask) {
    if (!best.valid || cut > best.cut || (cut == best.cut && lex_before(mask, best.mask))) {
        best = {cut, mask, true};
    }
}

using Adjacency = std::vector<std::vector<std::pair<std::uint32_t, double>>>;

double cut_of_mask(const Graph& g, std::uint64_t mask) {
    auto spin = [mask](std::uint32_t v) -> int {
        return (v != 0 && (mask >> (v - 1)) & 1u) ? -1 : +1;
    };
    double sum = 0.0;
    for (const auto& e : g.edges())
        if (spin(e.i) != spin(e.j)) sum += e.w;
    return sum;
}

// Walks masks lo..hi-1 in Gray-code order; each step flips one vertex and
// updates the cut in O(degree).
Candidate scan_block(const Graph& g, const Adjacency& adj, std::uint64_t lo,
                     std::uint64_t hi) {
    Candidate best;
    std::uint64_t gray = lo ^ (lo >> 1);
    std::vector<int> spins(g.n(), +1);
    for (std::uint32_t v = 1; v < g.n(); ++v)
        if ((gray >> (v - 1)) & 1u) spins[v] = -1;
    double cut = cut_of_mask(g, gray);
    consider(best, cut, gray);
    for (std::uint64_t k = lo + 1; k < hi; ++k) {
        const unsigned bit = unsigned(std::countr_zero(k));
        const std::uint32_t v = bit + 1;
        for (const auto& [u, w] : adj[v]) cut += (spins[u] == spins[v]) ? w : -w;
        spins[v] = -spins[v];
        gray ^= (std::uint64_t(1) << bit);
        consider(best, cut, gray);
    }
    return best;
}

} // namespace

BruteForceResult brute_force_maxcut(const Graph& g, const BruteForceOptions& opts) {
    if (g.n() > opts.max_n)
        throw ContractViolation("brute force capped at n=" + std::to_string(opts.max_n) +
                                " (got n=" + std::to_string(g.n()) +
                                "); raise the cap explicitly to proceed");

    Adjacency adj(g.n());
    for (const auto& e : g.edges()) {
        adj[e.i].push_back({e.j, e.w});
        adj[e.j].push_back({e.i, e.w});
    }

    const std::uint64_t total = std::uint64_t(1) << (g.n() - 1);
    unsigned workers = opts.threads == 0 ? 1 : opts.threads;
    if (workers > total) workers = unsigned(total);

    Candidate best;
    if (workers <= 1) {
        best = scan_block(g, adj, 0, total);
    } else {
        std::vector<Candidate> results(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = total / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = (w + 1 == workers) ? total : lo + chunk;
            pool.emplace_back(
                [&, w, lo, hi] { results[w] = scan_block(g, adj, lo, hi); });
        }
        for (auto& t : pool) t.join();
        // deterministic merge order keeps the result worker-count independent
        for (const auto& c : results) consider(best, c.cut, c.mask);
    }

    BruteForceResult out;
    out.best_cut = best.cut;
    out.spins.assign(g.n(), +1);
    for (std::uint32_t v = 1; v < g.n(); ++v)
        if ((best.mask >> (v - 1)) & 1u) out.spins[v] = -1;
    return out;
}

} // namespace brimsim
