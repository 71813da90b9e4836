#pragma once

#include <map>
#include <optional>
#include <string>

namespace brimsim {

/// Best-known cut values per instance. Lines read "instance_id best_value
/// source_tag". Lookups normalize ids case-insensitively and ignore zero
/// padding in a trailing number, so "G1", "g1" and "G01" all match.
class BestKnownRegistry {
public:
    struct Entry {
        double value = 0.0;
        std::string source;
    };

    void add(const std::string& id, double value, const std::string& source);
    std::optional<Entry> lookup(const std::string& id) const;
    const std::map<std::string, Entry>& entries() const { return entries_; }

    static std::string normalize_id(const std::string& id);

    static BestKnownRegistry load(std::istream& in);
    static BestKnownRegistry load_file(const std::string& path);

private:
    std::map<std::string, Entry> entries_; // keyed by normalized id
};

} // namespace brimsim
