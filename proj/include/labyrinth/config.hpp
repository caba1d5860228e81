#pragma once

#include "labyrinth/brain.hpp"
#include "labyrinth/properties.hpp"
#include "labyrinth/sensing.hpp"

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace labyrinth {

/// Everything a session needs that is not the seed.
struct GameConfig {
    DifficultyTable difficulty_table = default_difficulty_table();
    std::array<BrainKind, 4> brain_per_difficulty = {
        BrainKind::RandomWalk, BrainKind::WallFollower, BrainKind::GreedyChase,
        BrainKind::BfsChase};
    int max_level = 3;
    int level1_width = 13;
    int level1_height = 9;
    /// Resource key -> asset path. Only clients read it.
    std::map<std::string, std::string> resource_map = default_resource_map();

    const DifficultyPolicy& difficulty(DifficultyName name) const
    {
        return difficulty_table[static_cast<std::size_t>(name)];
    }
    BrainKind brain_for(DifficultyName name) const
    {
        return brain_per_difficulty[static_cast<std::size_t>(name)];
    }

    static std::map<std::string, std::string> default_resource_map();

    friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

/// A recognized key carried a bad value, or the combined result is inconsistent.
class ConfigError : public LabyrinthError {
public:
    ConfigError(std::string key, const std::string& reason);

    /// Offending property key; empty when the problem spans several keys.
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

struct ResolvedConfig {
    GameConfig config;
    std::vector<std::string> warnings;
};

/// Applies recognized overrides on top of the defaults. Unknown keys become warnings.
ResolvedConfig resolve_config(const PropertyMap& properties);

/// Throws ConfigError if the config could not have come out of resolve_config.
void validate_config(const GameConfig& config);

/// Reads, parses and resolves a properties file.
ResolvedConfig load_config_file(const std::filesystem::path& path);

inline constexpr std::string_view kDefaultPropertiesPath = "./labyrinth.properties";

} // namespace labyrinth
