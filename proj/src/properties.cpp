#include "labyrinth/properties.hpp"

namespace labyrinth {

namespace {

constexpr std::string_view kWhitespace = " \t\r\f\v";

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(kWhitespace);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(kWhitespace);
    return s.substr(first, last - first + 1);
}

} // namespace

PropertyMap::PropertyMap(std::vector<Entry> entries)
{
    for (auto& [key, value] : entries) {
        add(std::move(key), std::move(value));
    }
}

void PropertyMap::add(std::string key, std::string value)
{
    if (key.empty() || key.find('=') != std::string::npos) {
        throw InvalidArgument("property key must be non-empty and free of '=': '" + key + "'");
    }
    entries_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> PropertyMap::lookup(std::string_view key) const
{
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (it->first == key) {
            return it->second;
        }
    }
    return std::nullopt;
}

PropertiesParseError::PropertiesParseError(int line, const std::string& reason)
    : LabyrinthError("line " + std::to_string(line) + ": " + reason), line_(line)
{
}

PropertyMap parse_properties(std::string_view text)
{
    PropertyMap map;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(text.substr(pos, end - pos));
        ++line_no;
        pos = end + 1;

        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw PropertiesParseError(line_no, "expected key=value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        if (key.empty()) {
            throw PropertiesParseError(line_no, "empty key");
        }
        map.add(std::string(key), std::string(trim(line.substr(eq + 1))));
    }
    return map;
}

std::string serialize_properties(const PropertyMap& map)
{
    std::string out;
    for (const auto& [key, value] : map.entries()) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    return out;
}

} // namespace labyrinth
