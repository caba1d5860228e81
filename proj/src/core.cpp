#include "labyrinth/core.hpp"

#include <sstream>

namespace labyrinth {

char direction_letter(Direction d) noexcept
{
    constexpr std::array<char, 4> letters = {'N', 'E', 'S', 'W'};
    return letters[static_cast<std::size_t>(d)];
}

std::optional<Direction> parse_direction_letter(std::string_view token) noexcept
{
    if (token.size() != 1) {
        return std::nullopt;
    }
    for (Direction d : kDirections) {
        if (direction_letter(d) == token.front()) {
            return d;
        }
    }
    return std::nullopt;
}

std::pair<Rng, std::uint64_t> rng_below(Rng r, std::uint64_t k)
{
    if (k == 0) {
        throw InvalidArgument("rng_below: bound must be at least 1");
    }
    auto [next, value] = rng_next(r);
    return {next, value % k};
}

std::string_view event_kind_name(EventKind kind) noexcept
{
    switch (kind) {
    case EventKind::Growl: return "growl";
    case EventKind::Caught: return "caught";
    case EventKind::LevelFinished: return "level_finished";
    case EventKind::GameFinished: return "game_finished";
    case EventKind::Blocked: return "blocked";
    case EventKind::Moved: return "moved";
    }
    return "unknown";
}

std::string describe(const GameEvent& event)
{
    std::ostringstream out;
    out << event.tick << ' ' << event_kind_name(event.kind);
    if (event.position) {
        out << ' ' << event.position->col << ',' << event.position->row;
    }
    if (event.direction) {
        out << ' ' << direction_letter(*event.direction);
    }
    return out.str();
}

} // namespace labyrinth
