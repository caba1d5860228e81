#include "labyrinth/sim.hpp"

#include <sstream>
#include <thread>

namespace labyrinth {

std::string_view hero_policy_token(HeroPolicyKind kind) noexcept
{
    switch (kind) {
    case HeroPolicyKind::Stationary: return "stationary";
    case HeroPolicyKind::RandomWalk: return "random_walk";
    case HeroPolicyKind::BfsToExit: return "bfs_to_exit";
    }
    return "stationary";
}

std::optional<HeroPolicyKind> parse_hero_policy(std::string_view token) noexcept
{
    for (HeroPolicyKind kind :
         {HeroPolicyKind::Stationary, HeroPolicyKind::RandomWalk, HeroPolicyKind::BfsToExit}) {
        if (hero_policy_token(kind) == token) {
            return kind;
        }
    }
    return std::nullopt;
}

std::optional<Direction> next_intent(HeroPolicy& policy, const Session& s)
{
    switch (policy.kind) {
    case HeroPolicyKind::Stationary: return std::nullopt;
    case HeroPolicyKind::RandomWalk: {
        std::vector<Direction> open;
        for (Direction d : kDirections) {
            if (s.maze.passage(s.hero, d)) {
                open.push_back(d);
            }
        }
        if (open.empty()) {
            return std::nullopt;
        }
        return open[draw_below(policy.rng, open.size())];
    }
    case HeroPolicyKind::BfsToExit: {
        const Exit& exit = s.maze.exit();
        if (s.hero == exit.cell) {
            return exit.side;
        }
        const std::vector<int> dist = distances_from(s.maze, exit.cell);
        const int here = dist[s.maze.index(s.hero)];
        for (Direction d : kDirections) {
            if (s.maze.passage(s.hero, d) &&
                dist[s.maze.index(step_toward(s.hero, d))] == here - 1) {
                return d;
            }
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

std::string_view outcome_token(Outcome outcome) noexcept
{
    switch (outcome) {
    case Outcome::Capture: return "capture";
    case Outcome::Escape: return "escape";
    case Outcome::Timeout: return "timeout";
    }
    return "escape";
}

std::uint64_t episode_seed(std::uint64_t base_seed, std::size_t episode) noexcept
{
    return splitmix_mix(base_seed + (static_cast<std::uint64_t>(episode) + 1) * kSplitMixGamma);
}

EpisodeRecord run_episode(const GameConfig& base_config, DifficultyName difficulty,
                          BrainKind brain, HeroPolicyKind hero, std::uint64_t seed,
                          std::size_t index)
{
    GameConfig config = base_config;
    config.brain_per_difficulty[static_cast<std::size_t>(difficulty)] = brain;

    Session s = new_session(config, seed);
    apply_input_in_place(s, InputEvent::advance());
    apply_input_in_place(s, InputEvent::select(difficulty));

    HeroPolicy policy{hero, Rng{seed ^ 0x4845524F00000000ull}};
    EpisodeRecord record{index, seed, Outcome::Timeout, 0};
    while (s.tick < kEpisodeTickCap) {
        if (s.phase == Phase::LevelFinished) {
            apply_input_in_place(s, InputEvent::advance());
            continue;
        }
        if (s.phase == Phase::GameOver) {
            record.outcome = Outcome::Capture;
            break;
        }
        if (s.phase == Phase::GameFinished) {
            record.outcome = Outcome::Escape;
            break;
        }
        if (const auto intent = next_intent(policy, s)) {
            apply_input_in_place(s, InputEvent::key(*intent));
        }
        step_in_place(s);
    }
    // A terminal phase reached on the very last allowed tick still counts.
    if (record.outcome == Outcome::Timeout && s.phase == Phase::GameOver) {
        record.outcome = Outcome::Capture;
    } else if (record.outcome == Outcome::Timeout && s.phase == Phase::GameFinished) {
        record.outcome = Outcome::Escape;
    }
    record.ticks = s.tick;
    return record;
}

BatchStats run_batch(const BatchRequest& request)
{
    if (request.episodes == 0) {
        throw InvalidArgument("run_batch: episodes must be at least 1");
    }
    validate_config(request.config);

    BatchStats stats;
    stats.episodes = request.episodes;
    stats.records.resize(request.episodes);

    const auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < request.episodes; i += stride) {
            stats.records[i] = run_episode(request.config, request.difficulty, request.brain,
                                           request.hero, episode_seed(request.base_seed, i), i);
        }
    };
    const unsigned threads = std::max(1u, request.threads);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t, threads);
        }
    }

    double tick_sum = 0.0;
    for (const EpisodeRecord& r : stats.records) {
        if (r.outcome == Outcome::Capture) {
            ++stats.captures;
        } else {
            ++stats.escapes;
            stats.timeouts += r.outcome == Outcome::Timeout ? 1 : 0;
        }
        tick_sum += static_cast<double>(r.ticks);
    }
    stats.capture_rate =
        static_cast<double>(stats.captures) / static_cast<double>(stats.episodes);
    stats.mean_ticks = tick_sum / static_cast<double>(stats.episodes);
    return stats;
}

std::uint64_t batch_digest(const BatchStats& stats)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    const auto mix_in = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xFF;
            h *= 0x100000001b3ull;
        }
    };
    mix_in(stats.episodes);
    for (const EpisodeRecord& r : stats.records) {
        mix_in(r.episode);
        mix_in(r.seed);
        mix_in(static_cast<std::uint64_t>(r.outcome));
        mix_in(static_cast<std::uint64_t>(r.ticks));
    }
    return h;
}

std::string batch_csv(const BatchStats& stats)
{
    std::ostringstream out;
    out << "episode,seed,outcome,ticks\n";
    for (const EpisodeRecord& r : stats.records) {
        out << r.episode << ',' << r.seed << ',' << outcome_token(r.outcome) << ',' << r.ticks
            << '\n';
    }
    return out.str();
}

Session run_fuzz_session(const GameConfig& config, std::uint64_t seed, std::int64_t ticks,
                         std::uint64_t input_seed)
{
    Session s = new_session(config, seed);
    Rng rng{input_seed};
    // Non-playing phases do not advance the clock, so bound the loop separately.
    const std::int64_t max_iterations = 50 * ticks + 100;
    for (std::int64_t i = 0; i < max_iterations && s.tick < ticks; ++i) {
        const std::uint64_t roll = draw_below(rng, 100);
        if (roll < 55) {
            apply_input_in_place(s, InputEvent::key(kDirections[draw_below(rng, 4)]));
        } else if (roll < 75) {
            apply_input_in_place(s, InputEvent::advance());
        } else if (roll < 90) {
            apply_input_in_place(s, InputEvent::select(kDifficultyNames[draw_below(rng, 4)]));
        } else if (roll < 93) {
            apply_input_in_place(s, InputEvent::restart());
        }
        // Several inputs may land on the same tick.
        if (draw_below(rng, 4) != 0) {
            step_in_place(s);
        }
    }
    return s;
}

std::string render_text(const Maze& m, std::optional<Position> hero,
                        std::optional<Position> monster, std::optional<double> fog_radius)
{
    const auto fogged = [&](Position p) {
        return fog_radius && hero && !within_radius(*hero, p, *fog_radius);
    };
    const auto border = [&](int row, Direction side, const char* left, const char* right) {
        std::string line = left;
        for (int col = 0; col < m.width(); ++col) {
            line += m.wall({col, row}, side) ? "─" : " ";
            line += col + 1 == m.width() ? right : "─";
        }
        return line + '\n';
    };

    std::string out = border(0, Direction::North, "┌", "┐");
    for (int row = 0; row < m.height(); ++row) {
        const Position first{0, row};
        out += fogged(first) ? "░" : (m.wall(first, Direction::West) ? "│" : " ");
        for (int col = 0; col < m.width(); ++col) {
            const Position p{col, row};
            if (fogged(p)) {
                out += "░░";
                continue;
            }
            const bool has_hero = hero && *hero == p;
            const bool has_monster = monster && *monster == p;
            if (has_hero && has_monster) {
                out += '*';
            } else if (has_hero) {
                out += 'H';
            } else if (has_monster) {
                out += 'M';
            } else if (row + 1 < m.height() && m.wall(p, Direction::South)) {
                out += '_';
            } else {
                out += ' ';
            }
            out += m.wall(p, Direction::East) ? "│" : " ";
        }
        out += '\n';
    }
    out += border(m.height() - 1, Direction::South, "└", "┘");
    return out;
}

} // namespace labyrinth
