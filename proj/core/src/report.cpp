#include "brimsim/report.hpp"

#include <charconv>
#include <cmath>

namespace brimsim {

std::string format_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[24];
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, std::int64_t(v));
        return std::string(buf, p);
    }
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

std::string to_csv_row(const RunReport& r, bool with_wall) {
    std::string row;
    row.reserve(96);
    row += r.solver;
    row += ',';
    row += r.instance;
    row += ',';
    row += std::to_string(r.seed);
    row += ',';
    row += format_number(r.budget);
    row += ',';
    if (with_wall) row += format_number(std::round(r.wall_ms * 1000.0) / 1000.0);
    row += ',';
    row += format_number(r.cut);
    row += ',';
    row += format_number(r.energy);
    row += ',';
    if (r.distance) row += format_number(*r.distance);
    return row;
}

} // namespace brimsim
