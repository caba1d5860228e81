#include "labyrinth/engine.hpp"

#include <bit>
#include <cstdio>

namespace labyrinth {

namespace {

void enter_level(Session& s, int level)
{
    s.level = level;
    const MazeSpec spec = level_maze_spec(s.config, s.base_seed, level);
    s.maze = generate_maze(spec);
    s.hero = s.maze.hero_start();
    s.monster = s.maze.monster_start();
    s.monster_facing = Direction::South;
    s.pending_intent.reset();
    s.rng = Rng{spec.seed};
    s.brain = BrainState{};
    s.brain.kind = s.config.brain_for(s.difficulty.name);
    s.brain.rng = Rng{draw(s.rng)};
}

/// Resets everything except the clock, the input log and undrained events.
void reset_to_splash(Session& s)
{
    s.phase = Phase::Splash;
    s.difficulty = s.config.difficulty(DifficultyName::Medium);
    enter_level(s, 1);
}

void emit(Session& s, std::vector<GameEvent>& out, GameEvent event)
{
    out.push_back(event);
    s.undrained_events.push_back(std::move(event));
}

class Preimage {
public:
    void u8(std::uint8_t v) { bytes_.push_back(v); }
    void u32(std::uint32_t v)
    {
        for (int i = 0; i < 4; ++i) {
            u8(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    }
    void u64(std::uint64_t v)
    {
        for (int i = 0; i < 8; ++i) {
            u8(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    }
    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    void pos(Position p)
    {
        u8(static_cast<std::uint8_t>(p.col));
        u8(static_cast<std::uint8_t>(p.row));
    }
    void dir(std::optional<Direction> d) { u8(d ? static_cast<std::uint8_t>(*d) : 0xFF); }

    std::uint64_t fnv1a() const
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (std::uint8_t b : bytes_) {
            h ^= b;
            h *= 0x100000001b3ull;
        }
        return h;
    }

private:
    std::vector<std::uint8_t> bytes_;
};

} // namespace

std::string_view phase_token(Phase phase) noexcept
{
    switch (phase) {
    case Phase::Splash: return "splash";
    case Phase::Instructions: return "instructions";
    case Phase::Playing: return "playing";
    case Phase::LevelFinished: return "finished_level";
    case Phase::GameOver: return "game_over";
    case Phase::GameFinished: return "finished_game";
    }
    return "splash";
}

bool phase_transition_allowed(Phase from, Phase to) noexcept
{
    if (from == to) {
        return true;
    }
    switch (from) {
    case Phase::Splash: return to == Phase::Instructions;
    case Phase::Instructions: return to == Phase::Playing;
    case Phase::Playing:
        return to == Phase::LevelFinished || to == Phase::GameOver || to == Phase::GameFinished;
    case Phase::LevelFinished: return to == Phase::Playing;
    case Phase::GameOver:
    case Phase::GameFinished: return to == Phase::Splash;
    }
    return false;
}

std::uint64_t level_seed(std::uint64_t base_seed, int level) noexcept
{
    return rng_next(Rng{base_seed ^ static_cast<std::uint64_t>(level)}).second;
}

MazeSpec level_maze_spec(const GameConfig& config, std::uint64_t base_seed, int level)
{
    const int growth = 2 * (level - 1);
    return {config.level1_width + growth, config.level1_height + growth,
            level_seed(base_seed, level)};
}

Session new_session(const GameConfig& config, std::uint64_t seed)
{
    validate_config(config);
    Session s;
    s.config = config;
    s.base_seed = seed;
    s.tick = 0;
    reset_to_splash(s);
    return s;
}

bool apply_input_in_place(Session& s, const InputEvent& e)
{
    using Kind = InputEvent::Kind;
    bool accepted = true;
    switch (s.phase) {
    case Phase::Playing:
        if (e.kind == Kind::Key) {
            s.pending_intent = e.direction;
        } else {
            accepted = false;
        }
        break;
    case Phase::Splash:
        if (e.kind == Kind::Advance) {
            s.phase = Phase::Instructions;
        } else {
            accepted = false;
        }
        break;
    case Phase::Instructions:
        if (e.kind == Kind::SelectDifficulty) {
            s.difficulty = s.config.difficulty(e.difficulty);
            s.brain.kind = s.config.brain_for(e.difficulty);
            s.phase = Phase::Playing;
        } else {
            accepted = false;
        }
        break;
    case Phase::LevelFinished:
        if (e.kind == Kind::Advance) {
            enter_level(s, s.level + 1);
            s.phase = Phase::Playing;
        } else {
            accepted = false;
        }
        break;
    case Phase::GameOver:
    case Phase::GameFinished:
        if (e.kind == Kind::Restart) {
            reset_to_splash(s);
        } else {
            accepted = false;
        }
        break;
    }
    if (accepted) {
        s.input_log.push_back({s.tick, e});
    }
    return accepted;
}

std::vector<GameEvent> step_in_place(Session& s)
{
    std::vector<GameEvent> events;
    if (s.phase != Phase::Playing) {
        return events;
    }
    const std::int64_t tick = s.tick;
    const Position hero_prev = s.hero;
    const Position monster_prev = s.monster;

    // 1. hero
    bool escaped = false;
    if (s.pending_intent) {
        const Direction d = *s.pending_intent;
        s.pending_intent.reset();
        if (s.hero == s.maze.exit().cell && d == s.maze.exit().side) {
            escaped = true;
        } else if (s.maze.passage(s.hero, d)) {
            s.hero = step_toward(s.hero, d);
            emit(s, events, {EventKind::Moved, tick, s.hero, d});
        } else {
            emit(s, events, {EventKind::Blocked, tick, s.hero, d});
        }
    }

    // 2. escape ends the tick before the monster acts
    if (escaped) {
        const bool last = s.level >= s.config.max_level;
        s.phase = last ? Phase::GameFinished : Phase::LevelFinished;
        emit(s, events, {last ? EventKind::GameFinished : EventKind::LevelFinished, tick, s.hero,
                         s.maze.exit().side});
        s.tick += 1;
        return events;
    }

    // 3. monster on its cadence
    if (tick % s.difficulty.monster_step_period == 0) {
        auto [brain, d] = choose_direction(std::move(s.brain),
                                           Observation{s.maze, s.monster, s.hero, tick});
        s.brain = std::move(brain);
        s.monster = step_toward(s.monster, d);
        s.monster_facing = d;
    }

    // 4. capture
    if (caught_check(hero_prev, s.hero, monster_prev, s.monster)) {
        s.phase = Phase::GameOver;
        emit(s, events, {EventKind::Caught, tick, s.hero, std::nullopt});
    }

    // 5. growl
    if (hearing_check(s.hero, s.monster, s.difficulty.hearing_radius)) {
        emit(s, events, {EventKind::Growl, tick, std::nullopt, std::nullopt});
    }

    s.tick += 1;
    return events;
}

Session apply_input(Session s, const InputEvent& e)
{
    apply_input_in_place(s, e);
    return s;
}

std::pair<Session, std::vector<GameEvent>> step(Session s)
{
    auto events = step_in_place(s);
    return {std::move(s), std::move(events)};
}

ClientView snapshot(const Session& s)
{
    ClientView view;
    view.phase = s.phase;
    view.tick = s.tick;
    view.level = s.level;
    view.hero = s.hero;
    const double radius = s.difficulty.searchlight_radius;
    for (Position p : visible_cells(s.maze.width(), s.maze.height(), s.hero, radius)) {
        view.visible.push_back({p, s.maze.wall_mask(p)});
    }
    if (within_radius(s.hero, s.monster, radius)) {
        view.monster = s.monster;
    }
    view.heard = hearing_check(s.hero, s.monster, s.difficulty.hearing_radius);
    view.facing_sprite = monster_sprite_key(s.monster_facing, s.tick);
    view.events = s.undrained_events;
    return view;
}

ClientView take_snapshot(Session& s)
{
    ClientView view = snapshot(s);
    s.undrained_events.clear();
    return view;
}

std::uint64_t state_digest(const Session& s)
{
    Preimage p;
    p.u32(0x4C425931); // "LBY1"
    p.u8(static_cast<std::uint8_t>(s.phase));

    p.u32(static_cast<std::uint32_t>(s.config.max_level));
    p.u8(static_cast<std::uint8_t>(s.config.level1_width));
    p.u8(static_cast<std::uint8_t>(s.config.level1_height));
    for (const DifficultyPolicy& policy : s.config.difficulty_table) {
        p.f64(policy.searchlight_radius);
        p.u32(static_cast<std::uint32_t>(policy.monster_step_period));
        p.f64(policy.hearing_radius);
    }
    for (BrainKind kind : s.config.brain_per_difficulty) {
        p.u8(static_cast<std::uint8_t>(kind));
    }

    p.u8(static_cast<std::uint8_t>(s.difficulty.name));
    p.f64(s.difficulty.searchlight_radius);
    p.u32(static_cast<std::uint32_t>(s.difficulty.monster_step_period));
    p.f64(s.difficulty.hearing_radius);
    p.u32(static_cast<std::uint32_t>(s.level));

    p.u8(static_cast<std::uint8_t>(s.maze.width()));
    p.u8(static_cast<std::uint8_t>(s.maze.height()));
    for (std::uint8_t mask : s.maze.walls()) {
        p.u8(mask);
    }
    p.pos(s.maze.exit().cell);
    p.dir(s.maze.exit().side);
    p.pos(s.maze.hero_start());
    p.pos(s.maze.monster_start());

    p.pos(s.hero);
    p.pos(s.monster);
    p.dir(s.monster_facing);
    p.i64(s.tick);
    p.dir(s.pending_intent);

    p.u8(static_cast<std::uint8_t>(s.brain.kind));
    p.dir(s.brain.last_direction);
    p.u64(s.brain.rng.state);
    p.u32(static_cast<std::uint32_t>(s.brain.visited_counts.size()));
    for (const auto& [cell, count] : s.brain.visited_counts) {
        p.pos(cell);
        p.i64(count);
    }

    p.u64(s.rng.state);
    p.u64(s.base_seed);
    p.u64(s.input_log.size());
    for (const LoggedInput& in : s.input_log) {
        p.i64(in.tick);
        p.u8(static_cast<std::uint8_t>(in.event.kind));
        p.u8(static_cast<std::uint8_t>(in.event.direction));
        p.u8(static_cast<std::uint8_t>(in.event.difficulty));
    }
    return p.fnv1a();
}

std::string digest_hex(std::uint64_t digest)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

} // namespace labyrinth
