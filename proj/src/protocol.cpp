#include "labyrinth/protocol.hpp"

namespace labyrinth {

namespace {

using nlohmann::json;

json position_json(Position p)
{
    return json::array({p.col, p.row});
}

class ProtocolError : public LabyrinthError {
public:
    using LabyrinthError::LabyrinthError;
};

const json& require_string(const json& msg, const char* field)
{
    const auto it = msg.find(field);
    if (it == msg.end() || !it->is_string()) {
        throw ProtocolError(std::string("field '") + field + "' must be a string");
    }
    return *it;
}

DifficultyName difficulty_field(const json& msg, DifficultyName fallback)
{
    if (!msg.contains("difficulty")) {
        return fallback;
    }
    const std::string token = require_string(msg, "difficulty").get<std::string>();
    const auto name = parse_difficulty(token);
    if (!name) {
        throw ProtocolError("unknown difficulty '" + token + "'");
    }
    return *name;
}

} // namespace

json event_json(const GameEvent& event)
{
    json out = {{"kind", std::string(event_kind_name(event.kind))}, {"tick", event.tick}};
    if (event.position) {
        out["pos"] = position_json(*event.position);
    }
    if (event.direction) {
        out["dir"] = std::string(1, direction_letter(*event.direction));
    }
    return out;
}

json state_message(const ClientView& view)
{
    json visible = json::array();
    for (const VisibleCell& cell : view.visible) {
        visible.push_back(json::array({cell.cell.col, cell.cell.row, cell.walls}));
    }
    json events = json::array();
    for (const GameEvent& event : view.events) {
        events.push_back(event_json(event));
    }
    return {
        {"type", "state"},
        {"phase", std::string(phase_token(view.phase))},
        {"tick", view.tick},
        {"level", view.level},
        {"hero", position_json(view.hero)},
        {"visible", std::move(visible)},
        {"monster", view.monster ? position_json(*view.monster) : json(nullptr)},
        {"heard", view.heard},
        {"sprite", view.facing_sprite},
        {"events", std::move(events)},
    };
}

json error_message(std::string_view msg)
{
    return {{"type", "error"}, {"msg", std::string(msg)}};
}

ProtocolSession::ProtocolSession(GameConfig config, std::uint64_t default_seed)
    : config_(std::move(config)), default_seed_(default_seed)
{
    validate_config(config_);
}

std::vector<std::string> ProtocolSession::handle_message(std::string_view text)
{
    try {
        const json msg = json::parse(text);
        if (!msg.is_object()) {
            throw ProtocolError("message must be a JSON object");
        }
        const std::string type = require_string(msg, "type").get<std::string>();
        if (type == "start") {
            start(msg);
            return {};
        }
        if (!session_) {
            throw ProtocolError("no active session; send start first");
        }
        if (type == "input") {
            const std::string dir = require_string(msg, "dir").get<std::string>();
            const auto d = parse_direction_letter(dir);
            if (!d) {
                throw ProtocolError("dir must be one of N, E, S, W; got '" + dir + "'");
            }
            apply_input_in_place(*session_, InputEvent::key(*d));
        } else if (type == "advance") {
            advance(msg);
        } else if (type == "restart") {
            apply_input_in_place(*session_, InputEvent::restart());
        } else {
            throw ProtocolError("unknown message type '" + type + "'");
        }
        return {};
    } catch (const json::exception& e) {
        return {error_message(std::string("malformed message: ") + e.what()).dump()};
    } catch (const ProtocolError& e) {
        return {error_message(e.what()).dump()};
    }
}

void ProtocolSession::start(const json& msg)
{
    chosen_ = difficulty_field(msg, DifficultyName::Medium);
    std::uint64_t seed = default_seed_;
    if (msg.contains("seed")) {
        const json& field = msg.at("seed");
        if (!field.is_number_unsigned() && !(field.is_number_integer() && field.get<long long>() >= 0)) {
            throw ProtocolError("seed must be a non-negative integer");
        }
        seed = field.get<std::uint64_t>();
    }
    Session s = new_session(config_, seed);
    apply_input_in_place(s, InputEvent::advance());
    apply_input_in_place(s, InputEvent::select(chosen_));
    session_ = std::move(s);
}

void ProtocolSession::advance(const json& msg)
{
    // The instructions screen has no separate select message: advancing
    // from it starts play at the difficulty picked most recently.
    chosen_ = difficulty_field(msg, chosen_);
    if (session_->phase == Phase::Instructions) {
        apply_input_in_place(*session_, InputEvent::select(chosen_));
    } else {
        apply_input_in_place(*session_, InputEvent::advance());
    }
}

std::optional<std::string> ProtocolSession::tick()
{
    if (!session_) {
        return std::nullopt;
    }
    step_in_place(*session_);
    return state_message(take_snapshot(*session_)).dump();
}

} // namespace labyrinth
