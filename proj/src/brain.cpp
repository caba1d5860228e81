#include "labyrinth/brain.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <vector>

namespace labyrinth {

namespace {

std::vector<Direction> open_directions(const Maze& maze, Position at)
{
    std::vector<Direction> open;
    for (Direction d : kDirections) {
        if (maze.passage(at, d)) {
            open.push_back(d);
        }
    }
    return open;
}

int manhattan(Position a, Position b)
{
    return std::abs(a.col - b.col) + std::abs(a.row - b.row);
}

Direction pick_random_walk(BrainState& brain, const std::vector<Direction>& open)
{
    std::vector<Direction> forward;
    for (Direction d : open) {
        if (!brain.last_direction || d != opposite(*brain.last_direction)) {
            forward.push_back(d);
        }
    }
    const std::vector<Direction>& pool = forward.empty() ? open : forward;
    return pool[draw_below(brain.rng, pool.size())];
}

Direction pick_wall_follower(const BrainState& brain, const Maze& maze, Position at)
{
    const Direction heading = brain.last_direction.value_or(Direction::North);
    for (Direction d : {turn_left(heading), heading, turn_right(heading), opposite(heading)}) {
        if (maze.passage(at, d)) {
            return d;
        }
    }
    throw InvalidState("wall_follower: no open passage");
}

Direction pick_greedy(const Observation& obs, const std::vector<Direction>& open)
{
    Direction best = open.front();
    int best_distance = std::numeric_limits<int>::max();
    for (Direction d : open) {
        const int dist = manhattan(step_toward(obs.monster, d), obs.hero);
        if (dist < best_distance) {
            best = d;
            best_distance = dist;
        }
    }
    return best;
}

Direction pick_bfs(const Observation& obs, const std::vector<Direction>& open)
{
    const std::vector<int> from_hero = distances_from(obs.maze, obs.hero);
    const int here = from_hero[obs.maze.index(obs.monster)];
    if (here > 0) {
        for (Direction d : open) {
            if (from_hero[obs.maze.index(step_toward(obs.monster, d))] == here - 1) {
                return d;
            }
        }
    }
    return open.front();
}

Direction pick_explorer(const BrainState& brain, const Observation& obs,
                        const std::vector<Direction>& open)
{
    Direction best = open.front();
    std::int64_t fewest = std::numeric_limits<std::int64_t>::max();
    for (Direction d : open) {
        const std::int64_t seen = brain.visits(step_toward(obs.monster, d));
        if (seen < fewest) {
            best = d;
            fewest = seen;
        }
    }
    return best;
}

} // namespace

std::string_view brain_token(BrainKind kind) noexcept
{
    switch (kind) {
    case BrainKind::RandomWalk: return "random_walk";
    case BrainKind::WallFollower: return "wall_follower";
    case BrainKind::GreedyChase: return "greedy_chase";
    case BrainKind::BfsChase: return "bfs_chase";
    case BrainKind::Explorer: return "explorer";
    }
    return "random_walk";
}

std::optional<BrainKind> parse_brain(std::string_view token) noexcept
{
    for (BrainKind kind : kBrainKinds) {
        if (brain_token(kind) == token) {
            return kind;
        }
    }
    return std::nullopt;
}

std::pair<BrainState, Direction> choose_direction(BrainState brain, const Observation& obs)
{
    const std::vector<Direction> open = open_directions(obs.maze, obs.monster);
    if (open.empty()) {
        throw InvalidState("monster cell has no open passage");
    }

    Direction chosen = open.front();
    switch (brain.kind) {
    case BrainKind::RandomWalk: chosen = pick_random_walk(brain, open); break;
    case BrainKind::WallFollower: chosen = pick_wall_follower(brain, obs.maze, obs.monster); break;
    case BrainKind::GreedyChase: chosen = pick_greedy(obs, open); break;
    case BrainKind::BfsChase: chosen = pick_bfs(obs, open); break;
    case BrainKind::Explorer: chosen = pick_explorer(brain, obs, open); break;
    }

    ++brain.visited_counts[step_toward(obs.monster, chosen)];
    brain.last_direction = chosen;
    return {std::move(brain), chosen};
}

std::string monster_sprite_key(Direction facing, std::int64_t tick)
{
    std::string key = "monster.";
    key += static_cast<char>(std::tolower(direction_letter(facing)));
    key += '.';
    key += (tick % 2 == 0) ? '0' : '1';
    return key;
}

int shortest_path_len(const Maze& m, Position a, Position b)
{
    if (!m.in_bounds(a) || !m.in_bounds(b)) {
        throw InvalidArgument("shortest_path_len: position outside the maze");
    }
    return distances_from(m, a)[m.index(b)];
}

} // namespace labyrinth
