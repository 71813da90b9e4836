#include "brimsim/generator.hpp"

#include <charconv>
#include <cmath>

#include "brimsim/errors.hpp"
#include "brimsim/rng.hpp"

namespace brimsim {

WeightModel WeightModel::parse(const std::string& spec) {
    if (spec == "pm1") return pm1();
    auto split = [&](std::size_t from) {
        const auto colon = spec.find(':', from);
        if (colon == std::string::npos) throw ConfigError("bad weight model '" + spec + "'");
        return colon;
    };
    auto number = [&](std::size_t from, std::size_t to) {
        double v = 0.0;
        auto [p, ec] = std::from_chars(spec.data() + from, spec.data() + to, v);
        if (ec != std::errc{} || p != spec.data() + to)
            throw ConfigError("bad weight model bound in '" + spec + "'");
        return v;
    };
    if (spec.rfind("int:", 0) == 0) {
        const auto c = split(4);
        const double lo = number(4, c), hi = number(c + 1, spec.size());
        if (lo != std::floor(lo) || hi != std::floor(hi) || lo > hi)
            throw ConfigError("bad integer weight range '" + spec + "'");
        return ints(std::int64_t(lo), std::int64_t(hi));
    }
    if (spec.rfind("real:", 0) == 0) {
        const auto c = split(5);
        const double lo = number(5, c), hi = number(c + 1, spec.size());
        if (!(lo < hi)) throw ConfigError("bad real weight range '" + spec + "'");
        return reals(lo, hi);
    }
    throw ConfigError("unknown weight model '" + spec + "' (pm1 | int:lo:hi | real:lo:hi)");
}

std::string WeightModel::to_string() const {
    switch (kind) {
    case Kind::plus_minus_one: return "pm1";
    case Kind::int_range:
        return "int:" + std::to_string(std::int64_t(lo)) + ":" + std::to_string(std::int64_t(hi));
    case Kind::real_range: {
        return "real:" + std::to_string(lo) + ":" + std::to_string(hi);
    }
    }
    return "pm1";
}

Graph gen_random_graph(std::uint32_t n, double density, const WeightModel& model,
                       std::uint64_t seed) {
    if (n < 2) throw ContractViolation("generator needs n >= 2");
    if (!(density > 0.0) || density > 1.0)
        throw ContractViolation("density must lie in (0, 1]");

    std::mt19937_64 rng(seed);
    auto draw_weight = [&]() -> double {
        switch (model.kind) {
        case WeightModel::Kind::plus_minus_one: return double(rademacher(rng));
        case WeightModel::Kind::int_range:
            return double(uniform_int(rng, std::int64_t(model.lo), std::int64_t(model.hi)));
        case WeightModel::Kind::real_range: return uniform_double(rng, model.lo, model.hi);
        }
        return 0.0;
    };

    std::vector<Edge> edges;
    edges.reserve(std::size_t(density * 0.5 * double(n) * double(n - 1)) + 16);
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (unit_double(rng) < density) edges.push_back({i, j, draw_weight()});
        }
    }
    return Graph(n, std::move(edges));
}

} // namespace brimsim
