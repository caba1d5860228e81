#pragma once

#include "labyrinth/core.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace labyrinth {

enum class DifficultyName : std::uint8_t { SuperEasy = 0, Easy = 1, Medium = 2, Difficult = 3 };

/// Easiest first.
inline constexpr std::array<DifficultyName, 4> kDifficultyNames = {
    DifficultyName::SuperEasy, DifficultyName::Easy, DifficultyName::Medium,
    DifficultyName::Difficult};

std::string_view difficulty_token(DifficultyName name) noexcept;
std::optional<DifficultyName> parse_difficulty(std::string_view token) noexcept;

/// Difficulty is visibility plus monster pace: torch radius, ticks between
/// monster moves, and how far away the monster can be heard.
struct DifficultyPolicy {
    DifficultyName name = DifficultyName::Medium;
    double searchlight_radius = 0.0;
    int monster_step_period = 1;
    double hearing_radius = 0.0;

    friend bool operator==(const DifficultyPolicy&, const DifficultyPolicy&) = default;
};

using DifficultyTable = std::array<DifficultyPolicy, 4>;

/// super_easy (8, 6, 12), easy (6, 5, 10), medium (4, 3, 8), difficult (2.5, 2, 6).
DifficultyTable default_difficulty_table() noexcept;

/// Empty when the table is valid; otherwise a human-readable reason.
/// Requires strictly shrinking searchlight and period from easiest to hardest,
/// hearing >= searchlight, radii >= 0 and period >= 1.
std::optional<std::string> difficulty_table_violation(const DifficultyTable& table);

double distance(Position a, Position b) noexcept;

/// Cells whose centers lie within `radius` of the hero's center. Walls do not block light.
std::vector<Position> visible_cells(int width, int height, Position hero, double radius);

bool within_radius(Position a, Position b, double radius) noexcept;

bool hearing_check(Position hero, Position monster, double hearing_radius) noexcept;

/// Co-location after the tick, or the two actors swapping cells during it.
bool caught_check(Position hero_prev, Position hero_now, Position monster_prev,
                  Position monster_now) noexcept;

} // namespace labyrinth
