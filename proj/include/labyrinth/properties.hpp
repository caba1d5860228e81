#pragma once

#include "labyrinth/core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace labyrinth {

/// Ordered key/value pairs as they appeared in the file. Lookups are last-wins.
class PropertyMap {
public:
    using Entry = std::pair<std::string, std::string>;

    PropertyMap() = default;
    explicit PropertyMap(std::vector<Entry> entries);

    /// Throws InvalidArgument for an empty key or a key containing '='.
    void add(std::string key, std::string value);

    std::optional<std::string> lookup(std::string_view key) const;

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    friend bool operator==(const PropertyMap&, const PropertyMap&) = default;

private:
    std::vector<Entry> entries_;
};

class PropertiesParseError : public LabyrinthError {
public:
    PropertiesParseError(int line, const std::string& reason);

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// LF-separated (CR tolerated), trimmed, '#' comments, split at the first '='.
PropertyMap parse_properties(std::string_view text);

std::string serialize_properties(const PropertyMap& map);

} // namespace labyrinth
