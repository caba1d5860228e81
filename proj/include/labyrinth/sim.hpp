#pragma once

#include "labyrinth/engine.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace labyrinth {

enum class HeroPolicyKind : std::uint8_t { Stationary, RandomWalk, BfsToExit };

std::string_view hero_policy_token(HeroPolicyKind kind) noexcept;
std::optional<HeroPolicyKind> parse_hero_policy(std::string_view token) noexcept;

/// Scripted stand-in for a player.
struct HeroPolicy {
    HeroPolicyKind kind = HeroPolicyKind::Stationary;
    Rng rng;
};

/// Intent for the current tick, or none to stand still. bfs_to_exit walks the
/// unique tree path to the exit cell and then steps out through the opening.
std::optional<Direction> next_intent(HeroPolicy& policy, const Session& s);

enum class Outcome : std::uint8_t { Capture, Escape, Timeout };

std::string_view outcome_token(Outcome outcome) noexcept;

inline constexpr std::int64_t kEpisodeTickCap = 10'000;

struct EpisodeRecord {
    std::size_t episode = 0;
    std::uint64_t seed = 0;
    Outcome outcome = Outcome::Escape;
    std::int64_t ticks = 0;

    friend bool operator==(const EpisodeRecord&, const EpisodeRecord&) = default;
};

struct BatchStats {
    std::size_t episodes = 0;
    std::size_t captures = 0;
    /// Includes episodes that hit the tick cap.
    std::size_t escapes = 0;
    std::size_t timeouts = 0;
    double capture_rate = 0.0;
    double mean_ticks = 0.0;
    std::vector<EpisodeRecord> records;

    friend bool operator==(const BatchStats&, const BatchStats&) = default;
};

struct BatchRequest {
    GameConfig config;
    DifficultyName difficulty = DifficultyName::Medium;
    BrainKind brain = BrainKind::BfsChase;
    HeroPolicyKind hero = HeroPolicyKind::Stationary;
    std::size_t episodes = 1;
    std::uint64_t base_seed = 0;
    /// Worker threads; results do not depend on it.
    unsigned threads = 1;
};

/// Seed of episode i: SplitMix64 output number i+1 of the stream started at base_seed.
std::uint64_t episode_seed(std::uint64_t base_seed, std::size_t episode) noexcept;

EpisodeRecord run_episode(const GameConfig& config, DifficultyName difficulty, BrainKind brain,
                          HeroPolicyKind hero, std::uint64_t seed, std::size_t index = 0);

/// Throws InvalidArgument when episodes == 0.
BatchStats run_batch(const BatchRequest& request);

std::uint64_t batch_digest(const BatchStats& stats);

/// "episode,seed,outcome,ticks" plus one row per episode.
std::string batch_csv(const BatchStats& stats);

/// Drives a session with random inputs of every kind (keys, advances,
/// selections, restarts) until `ticks` Playing ticks have elapsed. Inputs come
/// from their own stream so the same session seed can be fuzzed many ways.
Session run_fuzz_session(const GameConfig& config, std::uint64_t seed, std::int64_t ticks,
                         std::uint64_t input_seed);

/// Box-drawing picture of the maze: (2*width+1) glyphs per line, height+2 lines.
/// Cells beyond `fog_radius` from the hero are shaded when a radius is given.
std::string render_text(const Maze& m, std::optional<Position> hero = std::nullopt,
                        std::optional<Position> monster = std::nullopt,
                        std::optional<double> fog_radius = std::nullopt);

} // namespace labyrinth
