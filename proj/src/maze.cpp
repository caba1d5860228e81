#include "labyrinth/maze.hpp"

#include <deque>
#include <string>

namespace labyrinth {

namespace {

constexpr std::uint8_t kAllWalls = 0x0F;

} // namespace

Maze::Maze(int width, int height)
    : width_(width), height_(height)
{
    if (width < 1 || height < 1 || width > kMaxMazeSide || height > kMaxMazeSide) {
        throw InvalidArgument("maze dimensions must be within [1,255], got " +
                              std::to_string(width) + "x" + std::to_string(height));
    }
    walls_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), kAllWalls);
}

bool Maze::on_perimeter_side(Position p, Direction d) const noexcept
{
    return in_bounds(p) && !in_bounds(step_toward(p, d));
}

bool Maze::passage(Position p, Direction d) const
{
    return in_bounds(p) && in_bounds(step_toward(p, d)) && !wall(p, d);
}

void Maze::set_wall(Position p, Direction d, bool present)
{
    const auto apply = [present](std::uint8_t& mask, Direction side) {
        if (present) {
            mask = static_cast<std::uint8_t>(mask | direction_bit(side));
        } else {
            mask = static_cast<std::uint8_t>(mask & ~direction_bit(side));
        }
    };
    apply(walls_.at(index(p)), d);
    const Position other = step_toward(p, d);
    if (in_bounds(other)) {
        apply(walls_[index(other)], opposite(d));
    }
}

void Maze::set_exit(Exit e)
{
    if (!on_perimeter_side(e.cell, e.side)) {
        throw InvalidArgument("exit must face outward from a perimeter cell");
    }
    if (on_perimeter_side(exit_.cell, exit_.side) && !(exit_ == e)) {
        set_wall(exit_.cell, exit_.side, true);
    }
    exit_ = e;
    set_wall(e.cell, e.side, false);
}

void Maze::set_starts(Position hero, Position monster)
{
    if (!in_bounds(hero) || !in_bounds(monster)) {
        throw InvalidArgument("start positions must lie inside the maze");
    }
    hero_start_ = hero;
    monster_start_ = monster;
}

Maze generate_maze(const MazeSpec& spec)
{
    Maze maze(spec.width, spec.height);
    Rng rng{spec.seed};

    std::vector<bool> visited(static_cast<std::size_t>(maze.cell_count()), false);
    std::vector<Position> stack;
    stack.reserve(visited.size());

    const Position start{0, 0};
    visited[maze.index(start)] = true;
    stack.push_back(start);

    std::vector<Direction> options;
    options.reserve(4);
    while (!stack.empty()) {
        const Position cur = stack.back();
        options.clear();
        for (Direction d : kDirections) {
            const Position next = step_toward(cur, d);
            if (maze.in_bounds(next) && !visited[maze.index(next)]) {
                options.push_back(d);
            }
        }
        if (options.empty()) {
            stack.pop_back();
            continue;
        }
        const Direction d = options[draw_below(rng, options.size())];
        const Position next = step_toward(cur, d);
        maze.set_wall(cur, d, false);
        visited[maze.index(next)] = true;
        stack.push_back(next);
    }

    // Exit goes on the perimeter cell deepest in the tree from the hero start.
    const std::vector<int> dist = distances_from(maze, start);
    std::optional<Position> best;
    for (int row = 0; row < maze.height(); ++row) {
        for (int col = 0; col < maze.width(); ++col) {
            const Position p{col, row};
            const bool perimeter =
                row == 0 || col == 0 || row == maze.height() - 1 || col == maze.width() - 1;
            if (perimeter && (!best || dist[maze.index(p)] > dist[maze.index(*best)])) {
                best = p;
            }
        }
    }
    for (Direction d : kDirections) {
        if (maze.on_perimeter_side(*best, d)) {
            maze.set_exit({*best, d});
            break;
        }
    }

    maze.set_starts(start, farthest_cell(maze, start).cell);
    return maze;
}

std::vector<int> distances_from(const Maze& m, Position from)
{
    std::vector<int> dist(static_cast<std::size_t>(m.cell_count()), -1);
    if (!m.in_bounds(from)) {
        return dist;
    }
    std::deque<Position> queue{from};
    dist[m.index(from)] = 0;
    while (!queue.empty()) {
        const Position cur = queue.front();
        queue.pop_front();
        for (Direction d : kDirections) {
            if (!m.passage(cur, d)) {
                continue;
            }
            const Position next = step_toward(cur, d);
            int& slot = dist[m.index(next)];
            if (slot < 0) {
                slot = dist[m.index(cur)] + 1;
                queue.push_back(next);
            }
        }
    }
    return dist;
}

FarthestCell farthest_cell(const Maze& m, Position from)
{
    const std::vector<int> dist = distances_from(m, from);
    FarthestCell best{from, 0};
    // Row-major scan with strict '>' keeps the smallest (row, col) among ties.
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist[i] > best.distance) {
            best = {m.position(i), dist[i]};
        }
    }
    return best;
}

int open_passage_count(const Maze& m)
{
    int count = 0;
    for (int row = 0; row < m.height(); ++row) {
        for (int col = 0; col < m.width(); ++col) {
            const Position p{col, row};
            count += m.passage(p, Direction::East) ? 1 : 0;
            count += m.passage(p, Direction::South) ? 1 : 0;
        }
    }
    return count;
}

bool is_perfect(const Maze& m)
{
    if (open_passage_count(m) != m.cell_count() - 1) {
        return false;
    }
    for (int reached : distances_from(m, {0, 0})) {
        if (reached < 0) {
            return false;
        }
    }
    return true;
}

} // namespace labyrinth
