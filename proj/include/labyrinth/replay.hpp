#pragma once

#include "labyrinth/engine.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace labyrinth {

class ReplayFormatError : public LabyrinthError {
public:
    using LabyrinthError::LabyrinthError;
};

/// Re-runs a recorded session. Inputs stamped with tick t are applied once
/// the session clock reads t; Playing steps fill the gaps. With `final_tick`
/// the run keeps stepping (while Playing) until the clock reaches it.
///
/// Throws ReplayFormatError for unsorted or negative ticks, or for a tick the
/// session cannot reach because it left the Playing phase.
Session run_replay(const GameConfig& config, std::uint64_t seed,
                   const std::vector<LoggedInput>& log,
                   std::optional<std::int64_t> final_tick = std::nullopt);

/// Contents of a replay file.
struct ReplayFile {
    std::uint64_t seed = 0;
    DifficultyName difficulty = DifficultyName::Medium;
    int levels = 3;
    std::optional<std::int64_t> final_tick;
    std::vector<LoggedInput> inputs;
    std::uint64_t digest = 0;

    friend bool operator==(const ReplayFile&, const ReplayFile&) = default;
};

/// Captures a finished (or paused) session for later verification.
ReplayFile record_replay(const Session& s);

/// Line-based text: header, one ":<tick> <event>" line per input, then "#digest <hex>".
std::string format_replay(const ReplayFile& replay);
ReplayFile parse_replay(std::string_view text);

/// "key N", "advance", "select medium", "restart".
std::string format_input(const InputEvent& e);
std::optional<InputEvent> parse_input(std::string_view text);

struct ReplayVerdict {
    bool matches = false;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
    Session final_state;
};

/// Replays under `config` with max_level taken from the file.
ReplayVerdict verify_replay(const ReplayFile& replay, GameConfig config);

} // namespace labyrinth
