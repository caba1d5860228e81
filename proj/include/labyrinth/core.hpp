#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace labyrinth {

/// Cell coordinates. Origin is the top-left cell; rows grow southward.
struct Position {
    int col = 0;
    int row = 0;

    friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

enum class Direction : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

/// Fixed scan order used for every tie-break in the project.
inline constexpr std::array<Direction, 4> kDirections = {
    Direction::North, Direction::East, Direction::South, Direction::West};

struct Offset {
    int dcol = 0;
    int drow = 0;

    friend constexpr bool operator==(const Offset&, const Offset&) = default;
};

constexpr Offset direction_delta(Direction d) noexcept
{
    switch (d) {
    case Direction::North: return {0, -1};
    case Direction::East: return {1, 0};
    case Direction::South: return {0, 1};
    case Direction::West: return {-1, 0};
    }
    return {};
}

constexpr Direction opposite(Direction d) noexcept
{
    return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}

/// Quarter turn counter-clockwise (North -> West).
constexpr Direction turn_left(Direction d) noexcept
{
    return static_cast<Direction>((static_cast<int>(d) + 3) % 4);
}

constexpr Direction turn_right(Direction d) noexcept
{
    return static_cast<Direction>((static_cast<int>(d) + 1) % 4);
}

constexpr Position step_toward(Position p, Direction d) noexcept
{
    const Offset o = direction_delta(d);
    return {p.col + o.dcol, p.row + o.drow};
}

/// Wall / wire bit for a direction: N=1, E=2, S=4, W=8.
constexpr std::uint8_t direction_bit(Direction d) noexcept
{
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(d));
}

/// Single-letter token ("N", "E", "S", "W").
char direction_letter(Direction d) noexcept;
std::optional<Direction> parse_direction_letter(std::string_view token) noexcept;

/// SplitMix64. The state is the whole generator; copying it forks the stream.
struct Rng {
    std::uint64_t state = 0;

    friend constexpr bool operator==(const Rng&, const Rng&) = default;
};

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t splitmix_mix(std::uint64_t z) noexcept
{
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

constexpr std::pair<Rng, std::uint64_t> rng_next(Rng r) noexcept
{
    r.state += kSplitMixGamma;
    return {r, splitmix_mix(r.state)};
}

/// Bounded draw by plain modulo over one rng_next value.
/// Throws std::invalid_argument when k == 0.
std::pair<Rng, std::uint64_t> rng_below(Rng r, std::uint64_t k);

/// In-place conveniences for code that threads one generator through a loop.
inline std::uint64_t draw(Rng& r) noexcept
{
    auto [next, value] = rng_next(r);
    r = next;
    return value;
}

inline std::uint64_t draw_below(Rng& r, std::uint64_t k)
{
    auto [next, value] = rng_below(r, k);
    r = next;
    return value;
}

enum class EventKind : std::uint8_t { Growl, Caught, LevelFinished, GameFinished, Blocked, Moved };

struct GameEvent {
    EventKind kind = EventKind::Moved;
    std::int64_t tick = 0;
    std::optional<Position> position;
    std::optional<Direction> direction;

    friend bool operator==(const GameEvent&, const GameEvent&) = default;
};

std::string_view event_kind_name(EventKind kind) noexcept;

/// One-line rendering used by transcripts and logs, e.g. "3 moved 2,1 E".
std::string describe(const GameEvent& event);

/// Base for every error the library reports; `what()` carries the detail.
class LabyrinthError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public LabyrinthError {
public:
    using LabyrinthError::LabyrinthError;
};

class InvalidState : public LabyrinthError {
public:
    using LabyrinthError::LabyrinthError;
};

} // namespace labyrinth
