#pragma once

#include "labyrinth/brain.hpp"
#include "labyrinth/config.hpp"
#include "labyrinth/maze.hpp"
#include "labyrinth/sensing.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace labyrinth {

enum class Phase : std::uint8_t { Splash, Instructions, Playing, LevelFinished, GameOver, GameFinished };

/// Wire tokens: splash, instructions, playing, finished_level, game_over, finished_game.
std::string_view phase_token(Phase phase) noexcept;

/// True iff the state machine allows going from `from` to `to` in one input or step.
bool phase_transition_allowed(Phase from, Phase to) noexcept;

struct InputEvent {
    enum class Kind : std::uint8_t { Key, Advance, SelectDifficulty, Restart };

    Kind kind = Kind::Advance;
    Direction direction = Direction::North;            // Key only
    DifficultyName difficulty = DifficultyName::Medium; // SelectDifficulty only

    static InputEvent key(Direction d) { return {Kind::Key, d, DifficultyName::Medium}; }
    static InputEvent advance() { return {Kind::Advance, Direction::North, DifficultyName::Medium}; }
    static InputEvent select(DifficultyName name)
    {
        return {Kind::SelectDifficulty, Direction::North, name};
    }
    static InputEvent restart() { return {Kind::Restart, Direction::North, DifficultyName::Medium}; }

    friend bool operator==(const InputEvent&, const InputEvent&) = default;
};

struct LoggedInput {
    std::int64_t tick = 0;
    InputEvent event;

    friend bool operator==(const LoggedInput&, const LoggedInput&) = default;
};

/// Complete game state. Every field is a deterministic function of
/// (config, base_seed, input_log) and the number of steps taken.
struct Session {
    Phase phase = Phase::Splash;
    GameConfig config;
    DifficultyPolicy difficulty;
    int level = 1;
    Maze maze{1, 1};
    Position hero;
    Position monster;
    Direction monster_facing = Direction::South;
    std::int64_t tick = 0;
    std::optional<Direction> pending_intent;
    BrainState brain;
    Rng rng;
    std::uint64_t base_seed = 0;
    std::vector<LoggedInput> input_log;
    /// Events produced since the last draining snapshot.
    std::vector<GameEvent> undrained_events;

    friend bool operator==(const Session&, const Session&) = default;
};

/// Level k is (width + 2(k-1)) x (height + 2(k-1)) cells.
MazeSpec level_maze_spec(const GameConfig& config, std::uint64_t base_seed, int level);

/// Seed for one level's maze: base_seed xor level, pushed through one SplitMix64 step.
std::uint64_t level_seed(std::uint64_t base_seed, int level) noexcept;

/// Throws ConfigError when the config does not validate.
Session new_session(const GameConfig& config, std::uint64_t seed);

/// Returns true if the event was accepted (and logged); unmatched pairs are no-ops.
bool apply_input_in_place(Session& s, const InputEvent& e);

/// One logical tick. No-op outside Playing.
std::vector<GameEvent> step_in_place(Session& s);

Session apply_input(Session s, const InputEvent& e);
std::pair<Session, std::vector<GameEvent>> step(Session s);

struct VisibleCell {
    Position cell;
    std::uint8_t walls = 0;

    friend bool operator==(const VisibleCell&, const VisibleCell&) = default;
};

/// What a client is allowed to know: only the torch-lit disc around the hero.
struct ClientView {
    Phase phase = Phase::Splash;
    std::int64_t tick = 0;
    int level = 1;
    Position hero;
    std::vector<VisibleCell> visible;
    std::optional<Position> monster;
    bool heard = false;
    std::string facing_sprite;
    std::vector<GameEvent> events;

    friend bool operator==(const ClientView&, const ClientView&) = default;
};

/// Builds the fog-filtered view and drains the pending events.
ClientView take_snapshot(Session& s);

/// Same view without draining; `events` holds whatever is still pending.
ClientView snapshot(const Session& s);

/// FNV-1a over a canonical byte encoding of the session (pending events excluded).
std::uint64_t state_digest(const Session& s);
std::string digest_hex(std::uint64_t digest);

} // namespace labyrinth
