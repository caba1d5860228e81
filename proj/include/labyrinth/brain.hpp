#pragma once

#include "labyrinth/core.hpp"
#include "labyrinth/maze.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace labyrinth {

enum class BrainKind : std::uint8_t { RandomWalk, WallFollower, GreedyChase, BfsChase, Explorer };

inline constexpr std::array<BrainKind, 5> kBrainKinds = {
    BrainKind::RandomWalk, BrainKind::WallFollower, BrainKind::GreedyChase, BrainKind::BfsChase,
    BrainKind::Explorer};

/// Config / CLI tokens: random_walk, wall_follower, greedy_chase, bfs_chase, explorer.
std::string_view brain_token(BrainKind kind) noexcept;
std::optional<BrainKind> parse_brain(std::string_view token) noexcept;

/// What the monster knows when it picks a move. The hero position is ground truth.
struct Observation {
    const Maze& maze;
    Position monster;
    Position hero;
    std::int64_t tick = 0;
};

struct BrainState {
    BrainKind kind = BrainKind::RandomWalk;
    std::optional<Direction> last_direction;
    std::map<Position, std::int64_t> visited_counts;
    Rng rng;

    std::int64_t visits(Position p) const
    {
        const auto it = visited_counts.find(p);
        return it == visited_counts.end() ? 0 : it->second;
    }

    friend bool operator==(const BrainState&, const BrainState&) = default;
};

/// Pure transition: picks an open passage out of the monster's cell and
/// records the move (visit count, heading, consumed randomness).
/// Throws InvalidState if the monster's cell has no open passage.
std::pair<BrainState, Direction> choose_direction(BrainState brain, const Observation& obs);

/// "monster.<n|e|s|w>.<tick mod 2>"
std::string monster_sprite_key(Direction facing, std::int64_t tick);

/// Length of the open-passage path between two cells; -1 if they are disconnected.
int shortest_path_len(const Maze& m, Position a, Position b);

} // namespace labyrinth
