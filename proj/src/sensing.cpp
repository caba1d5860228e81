#include "labyrinth/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace labyrinth {

namespace {

constexpr double kMaxSpan = 512.0;

} // namespace

std::string_view difficulty_token(DifficultyName name) noexcept
{
    switch (name) {
    case DifficultyName::SuperEasy: return "super_easy";
    case DifficultyName::Easy: return "easy";
    case DifficultyName::Medium: return "medium";
    case DifficultyName::Difficult: return "difficult";
    }
    return "medium";
}

std::optional<DifficultyName> parse_difficulty(std::string_view token) noexcept
{
    for (DifficultyName name : kDifficultyNames) {
        if (difficulty_token(name) == token) {
            return name;
        }
    }
    return std::nullopt;
}

DifficultyTable default_difficulty_table() noexcept
{
    return {{
        {DifficultyName::SuperEasy, 8.0, 6, 12.0},
        {DifficultyName::Easy, 6.0, 5, 10.0},
        {DifficultyName::Medium, 4.0, 3, 8.0},
        {DifficultyName::Difficult, 2.5, 2, 6.0},
    }};
}

std::optional<std::string> difficulty_table_violation(const DifficultyTable& table)
{
    std::ostringstream why;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const DifficultyPolicy& p = table[i];
        const std::string_view name = difficulty_token(kDifficultyNames[i]);
        if (!(p.searchlight_radius >= 0.0) || !(p.hearing_radius >= 0.0)) {
            why << name << ": radii must be non-negative";
            return why.str();
        }
        if (p.monster_step_period < 1) {
            why << name << ": period must be a positive integer";
            return why.str();
        }
        if (p.hearing_radius < p.searchlight_radius) {
            why << name << ": hearing radius " << p.hearing_radius
                << " is smaller than searchlight " << p.searchlight_radius;
            return why.str();
        }
        if (i == 0) {
            continue;
        }
        const DifficultyPolicy& easier = table[i - 1];
        const std::string_view easier_name = difficulty_token(kDifficultyNames[i - 1]);
        if (!(p.searchlight_radius < easier.searchlight_radius)) {
            why << "searchlight must strictly decrease: " << easier_name << '='
                << easier.searchlight_radius << ", " << name << '=' << p.searchlight_radius;
            return why.str();
        }
        if (!(p.monster_step_period < easier.monster_step_period)) {
            why << "period must strictly decrease: " << easier_name << '='
                << easier.monster_step_period << ", " << name << '=' << p.monster_step_period;
            return why.str();
        }
    }
    return std::nullopt;
}

double distance(Position a, Position b) noexcept
{
    return std::hypot(static_cast<double>(a.col - b.col), static_cast<double>(a.row - b.row));
}

bool within_radius(Position a, Position b, double radius) noexcept
{
    // Squared integer distance avoids rounding at exact boundaries (3-4-5).
    const long long dc = a.col - b.col;
    const long long dr = a.row - b.row;
    const double d2 = static_cast<double>(dc * dc + dr * dr);
    return radius >= 0.0 && d2 <= radius * radius;
}

std::vector<Position> visible_cells(int width, int height, Position hero, double radius)
{
    std::vector<Position> cells;
    if (radius < 0.0) {
        return cells;
    }
    const int reach = static_cast<int>(std::floor(std::min(radius, 2.0 * kMaxSpan)));
    const int row_lo = std::max(0, hero.row - reach);
    const int row_hi = std::min(height - 1, hero.row + reach);
    const int col_lo = std::max(0, hero.col - reach);
    const int col_hi = std::min(width - 1, hero.col + reach);
    for (int row = row_lo; row <= row_hi; ++row) {
        for (int col = col_lo; col <= col_hi; ++col) {
            const Position p{col, row};
            if (within_radius(hero, p, radius)) {
                cells.push_back(p);
            }
        }
    }
    return cells;
}

bool hearing_check(Position hero, Position monster, double hearing_radius) noexcept
{
    return within_radius(hero, monster, hearing_radius);
}

bool caught_check(Position hero_prev, Position hero_now, Position monster_prev,
                  Position monster_now) noexcept
{
    return hero_now == monster_now || (hero_now == monster_prev && monster_now == hero_prev);
}

} // namespace labyrinth
