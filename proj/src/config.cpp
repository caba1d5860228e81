#include "labyrinth/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace labyrinth {

namespace {

bool starts_with(std::string_view s, std::string_view prefix)
{
    return s.substr(0, prefix.size()) == prefix;
}

double parse_radius(const std::string& key, const std::string& value)
{
    double out = 0.0;
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end || !std::isfinite(out)) {
        throw ConfigError(key, "expected a number, got '" + value + "'");
    }
    if (out < 0.0) {
        throw ConfigError(key, "must be non-negative");
    }
    return out;
}

int parse_int(const std::string& key, const std::string& value, int lo, int hi)
{
    int out = 0;
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(key, "expected an integer, got '" + value + "'");
    }
    if (out < lo || out > hi) {
        throw ConfigError(key, "must be within [" + std::to_string(lo) + "," +
                                   std::to_string(hi) + "], got " + value);
    }
    return out;
}

/// Returns false when the key is not one we know.
bool apply_difficulty_key(GameConfig& config, const std::string& key, const std::string& value)
{
    // difficulty.<name>.<field>
    const std::string_view rest = std::string_view(key).substr(std::string_view("difficulty.").size());
    const auto dot = rest.find('.');
    if (dot == std::string_view::npos) {
        return false;
    }
    const auto name = parse_difficulty(rest.substr(0, dot));
    if (!name) {
        return false;
    }
    DifficultyPolicy& policy = config.difficulty_table[static_cast<std::size_t>(*name)];
    const std::string_view field = rest.substr(dot + 1);
    if (field == "searchlight") {
        policy.searchlight_radius = parse_radius(key, value);
    } else if (field == "hearing") {
        policy.hearing_radius = parse_radius(key, value);
    } else if (field == "period") {
        policy.monster_step_period = parse_int(key, value, 1, 1'000'000);
    } else {
        return false;
    }
    return true;
}

bool apply_key(GameConfig& config, const std::string& key, const std::string& value)
{
    if (starts_with(key, "difficulty.")) {
        return apply_difficulty_key(config, key, value);
    }
    if (starts_with(key, "brain.")) {
        const auto name = parse_difficulty(std::string_view(key).substr(6));
        if (!name) {
            return false;
        }
        const auto kind = parse_brain(value);
        if (!kind) {
            throw ConfigError(key, "unknown brain '" + value + "'");
        }
        config.brain_per_difficulty[static_cast<std::size_t>(*name)] = *kind;
        return true;
    }
    if (key == "engine.levels") {
        config.max_level = parse_int(key, value, 1, kMaxMazeSide);
        return true;
    }
    if (key == "engine.width") {
        config.level1_width = parse_int(key, value, 1, kMaxMazeSide);
        return true;
    }
    if (key == "engine.height") {
        config.level1_height = parse_int(key, value, 1, kMaxMazeSide);
        return true;
    }
    if ((starts_with(key, "image.") && key.size() > 6) ||
        (starts_with(key, "sound.") && key.size() > 6)) {
        config.resource_map[key] = value;
        return true;
    }
    return false;
}

} // namespace

std::map<std::string, std::string> GameConfig::default_resource_map()
{
    std::map<std::string, std::string> resources = {
        {"image.hero", "images/hero.png"},
        {"image.wall", "images/wall.png"},
        {"image.floor", "images/floor.png"},
        {"image.exit", "images/exit.png"},
        {"sound.growl", "sounds/growl.wav"},
        {"sound.footsteps", "sounds/footsteps.wav"},
        {"sound.caught", "sounds/caught.wav"},
    };
    for (const char* facing : {"n", "e", "s", "w"}) {
        for (const char* frame : {"0", "1"}) {
            const std::string suffix = std::string(facing) + "." + frame;
            resources["image.monster." + suffix] = "images/monster_" + std::string(facing) +
                                                   "_" + frame + ".png";
        }
    }
    return resources;
}

ConfigError::ConfigError(std::string key, const std::string& reason)
    : LabyrinthError(key.empty() ? reason : key + ": " + reason), key_(std::move(key))
{
}

void validate_config(const GameConfig& config)
{
    if (const auto why = difficulty_table_violation(config.difficulty_table)) {
        throw ConfigError("", "difficulty table: " + *why);
    }
    if (config.max_level < 1) {
        throw ConfigError("engine.levels", "must be at least 1");
    }
    const auto check_side = [](const char* key, int side) {
        if (side < 1 || side > kMaxMazeSide) {
            throw ConfigError(key, "must be within [1,255]");
        }
    };
    check_side("engine.width", config.level1_width);
    check_side("engine.height", config.level1_height);
    if (config.level1_width * config.level1_height < 2) {
        throw ConfigError("engine.width", "the level-1 maze needs at least two cells");
    }
    const int growth = 2 * (config.max_level - 1);
    if (config.level1_width + growth > kMaxMazeSide || config.level1_height + growth > kMaxMazeSide) {
        throw ConfigError("engine.levels", "the last level would exceed 255 cells per side");
    }
}

ResolvedConfig resolve_config(const PropertyMap& properties)
{
    ResolvedConfig out;
    for (const auto& [key, value] : properties.entries()) {
        if (!apply_key(out.config, key, value)) {
            out.warnings.push_back(key);
        }
    }
    validate_config(out.config);
    return out;
}

ResolvedConfig load_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("", "cannot open properties file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return resolve_config(parse_properties(text.str()));
}

} // namespace labyrinth
