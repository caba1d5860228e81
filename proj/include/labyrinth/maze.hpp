#pragma once

#include "labyrinth/core.hpp"

#include <cstdint>
#include <vector>

namespace labyrinth {

inline constexpr int kMaxMazeSide = 255;

struct MazeSpec {
    int width = 1;
    int height = 1;
    std::uint64_t seed = 0;
};

struct Exit {
    Position cell;
    Direction side = Direction::North;

    friend bool operator==(const Exit&, const Exit&) = default;
};

/// Rectangular grid of cells, each carrying a N/E/S/W wall mask.
///
/// Interior walls are stored on both sides of the shared edge; set_wall keeps
/// the two copies in agreement. The exit is the single perimeter edge left open.
class Maze {
public:
    /// Fully walled grid with the exit unset (exit side still walled).
    Maze(int width, int height);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int cell_count() const noexcept { return width_ * height_; }

    bool in_bounds(Position p) const noexcept
    {
        return p.col >= 0 && p.row >= 0 && p.col < width_ && p.row < height_;
    }

    bool on_perimeter_side(Position p, Direction d) const noexcept;

    std::uint8_t wall_mask(Position p) const { return walls_.at(index(p)); }
    bool wall(Position p, Direction d) const { return (wall_mask(p) & direction_bit(d)) != 0; }

    /// Open edge between two in-bounds cells. The exit opening does not count.
    bool passage(Position p, Direction d) const;

    /// Sets or clears a wall, mirroring it onto the neighbor across interior edges.
    void set_wall(Position p, Direction d, bool present);

    const Exit& exit() const noexcept { return exit_; }
    void set_exit(Exit e);

    Position hero_start() const noexcept { return hero_start_; }
    Position monster_start() const noexcept { return monster_start_; }
    void set_starts(Position hero, Position monster);

    const std::vector<std::uint8_t>& walls() const noexcept { return walls_; }

    std::size_t index(Position p) const noexcept
    {
        return static_cast<std::size_t>(p.row) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(p.col);
    }
    Position position(std::size_t index) const noexcept
    {
        return {static_cast<int>(index % static_cast<std::size_t>(width_)),
                static_cast<int>(index / static_cast<std::size_t>(width_))};
    }

    friend bool operator==(const Maze&, const Maze&) = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> walls_;
    Exit exit_;
    Position hero_start_;
    Position monster_start_;
};

/// Recursive backtracker seeded by SplitMix64; places exit and spawns.
/// Throws InvalidArgument unless 1 <= width, height <= 255.
Maze generate_maze(const MazeSpec& spec);

/// Connected and exactly width*height-1 open interior edges.
bool is_perfect(const Maze& m);

/// BFS distance from `from` to every cell over open passages; -1 if unreachable.
std::vector<int> distances_from(const Maze& m, Position from);

struct FarthestCell {
    Position cell;
    int distance = 0;
};

/// Maximum BFS distance cell; ties go to the smaller row, then smaller column.
FarthestCell farthest_cell(const Maze& m, Position from);

/// Number of open interior edges (exit opening excluded).
int open_passage_count(const Maze& m);

} // namespace labyrinth
