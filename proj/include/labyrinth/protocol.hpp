#pragma once

#include "labyrinth/engine.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace labyrinth {

/// Serializes a fog-filtered view as a `{"type":"state",...}` message.
/// Wall masks use N=1, E=2, S=4, W=8.
nlohmann::json state_message(const ClientView& view);
nlohmann::json error_message(std::string_view msg);
nlohmann::json event_json(const GameEvent& event);

/// One client connection's worth of game: decodes client messages into engine
/// inputs and produces a state frame per tick. Knows nothing about sockets.
class ProtocolSession {
public:
    ProtocolSession(GameConfig config, std::uint64_t default_seed);

    /// Returns the replies to send immediately (only ever error messages).
    std::vector<std::string> handle_message(std::string_view text);

    /// Advances the game one tick and returns the state frame; nothing before `start`.
    std::optional<std::string> tick();

    const std::optional<Session>& session() const noexcept { return session_; }

private:
    void start(const nlohmann::json& msg);
    void advance(const nlohmann::json& msg);

    GameConfig config_;
    std::uint64_t default_seed_;
    DifficultyName chosen_ = DifficultyName::Medium;
    std::optional<Session> session_;
};

} // namespace labyrinth
