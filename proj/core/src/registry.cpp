#include "brimsim/registry.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "brimsim/errors.hpp"

namespace brimsim {

std::string BestKnownRegistry::normalize_id(const std::string& id) {
    std::string out;
    out.reserve(id.size());
    for (char c : id) out += char(std::tolower(static_cast<unsigned char>(c)));
    // strip zero padding of a trailing digit group: g01 -> g1
    auto digits = out.find_last_not_of("0123456789");
    const std::size_t first_digit = digits == std::string::npos ? 0 : digits + 1;
    std::size_t k = first_digit;
    while (k + 1 < out.size() && out[k] == '0') ++k;
    if (k > first_digit) out.erase(first_digit, k - first_digit);
    return out;
}

void BestKnownRegistry::add(const std::string& id, double value, const std::string& source) {
    entries_[normalize_id(id)] = Entry{value, source};
}

std::optional<BestKnownRegistry::Entry> BestKnownRegistry::lookup(const std::string& id) const {
    const auto it = entries_.find(normalize_id(id));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

BestKnownRegistry BestKnownRegistry::load(std::istream& in) {
    BestKnownRegistry reg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string id, value_text, source;
        if (!(row >> id)) continue; // blank
        if (!(row >> value_text))
            throw ParseError("registry line needs 'id value [source]'", lineno);
        double value = 0.0;
        auto [p, ec] =
            std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
        if (ec != std::errc{} || p != value_text.data() + value_text.size())
            throw ParseError("bad best-known value '" + value_text + "'", lineno);
        row >> source;
        reg.add(id, value, source);
    }
    return reg;
}

BestKnownRegistry BestKnownRegistry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open registry file '" + path + "'");
    return load(in);
}

} // namespace brimsim
