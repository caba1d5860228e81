// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails. All limits and tolerances are fixed below.

#include "labyrinth/config.hpp"
#include "labyrinth/engine.hpp"
#include "labyrinth/maze.hpp"
#include "labyrinth/properties.hpp"
#include "labyrinth/protocol.hpp"
#include "labyrinth/replay.hpp"
#include "labyrinth/sim.hpp"

#include "../support/oracles.hpp"
#include "../support/transcript.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace labyrinth;

namespace {

constexpr double kPerfectnessSeconds = 10.0;
constexpr double kUniquenessSeconds = 30.0;
constexpr double kDeterminismSeconds = 30.0;
constexpr double kBrainOrderingSeconds = 60.0;

constexpr int kPerfectnessSeeds = 1000;
constexpr int kUniquenessSeeds = 10000;
constexpr int kDeterminismSessions = 100;
constexpr std::int64_t kDeterminismTicks = 1000;
constexpr int kFogSnapshots = 10000;
constexpr int kFogFrames = 1000;
constexpr int kPursuitMazes = 100;
constexpr std::size_t kBrainEpisodes = 1000;
constexpr int kRoundTripMaps = 1000;

struct Result {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, a);
    return buf;
}

Result maze_perfectness()
{
    const auto start = Clock::now();
    Rng r{0x5EED0001};
    int bad = 0;
    for (int i = 0; i < kPerfectnessSeeds; ++i) {
        const int w = 2 + static_cast<int>(draw_below(r, 29));
        const int h = 2 + static_cast<int>(draw_below(r, 29));
        const Maze m = generate_maze({w, h, draw(r)});
        // independent union-find check alongside the library's own
        if (!oracle::perfect(oracle::Grid::of(m)) || !is_perfect(m)) {
            ++bad;
        }
    }
    const double t = seconds_since(start);
    return {bad == 0 && t < kPerfectnessSeconds,
            std::to_string(kPerfectnessSeeds - bad) + "/" + std::to_string(kPerfectnessSeeds) +
                " perfect, " + fmt("%.2fs", t) + " (limit 10s)"};
}

Result maze_uniqueness()
{
    const auto start = Clock::now();
    Rng r{0x5EED0002};
    std::set<std::uint64_t> seeds;
    std::set<std::vector<std::uint8_t>> layouts;
    while (seeds.size() < static_cast<std::size_t>(kUniquenessSeeds)) {
        const std::uint64_t seed = draw(r);
        if (seeds.insert(seed).second) {
            layouts.insert(generate_maze({20, 20, seed}).walls());
        }
    }
    const double t = seconds_since(start);
    const std::size_t dupes = seeds.size() - layouts.size();
    return {dupes == 0 && t < kUniquenessSeconds,
            std::to_string(dupes) + " duplicates among " + std::to_string(seeds.size()) +
                " distinct seeds, " + fmt("%.2fs", t) + " (limit 30s)"};
}

Result determinism()
{
    const auto start = Clock::now();
    Rng r{0x5EED0003};
    int matched = 0;
    for (int i = 0; i < kDeterminismSessions; ++i) {
        const std::uint64_t seed = draw(r);
        const Session original = run_fuzz_session(GameConfig{}, seed, kDeterminismTicks, draw(r));
        const std::string text = format_replay(record_replay(original));
        const ReplayVerdict verdict = verify_replay(parse_replay(text), GameConfig{});
        if (verdict.matches && verdict.actual == state_digest(original)) {
            ++matched;
        }
    }
    const double t = seconds_since(start);
    return {matched == kDeterminismSessions && t < kDeterminismSeconds,
            std::to_string(matched) + "/" + std::to_string(kDeterminismSessions) +
                " replays reproduce the digest, " + fmt("%.2fs", t) + " (limit 30s)"};
}

bool inside(Position hero, int c, int r, double radius)
{
    const double dc = c - hero.col;
    const double dr = r - hero.row;
    return std::sqrt(dc * dc + dr * dr) <= radius;
}

Result fog_soundness()
{
    Rng r{0x5EED0004};
    long leaks = 0;
    long snapshots = 0;
    long cells = 0;
    while (snapshots < kFogSnapshots) {
        Session s = new_session(GameConfig{}, draw(r));
        for (int i = 0; i < 200 && snapshots < kFogSnapshots; ++i) {
            const auto roll = draw_below(r, 20);
            if (roll < 14) {
                apply_input_in_place(s, InputEvent::key(kDirections[draw_below(r, 4)]));
            } else if (roll < 17) {
                apply_input_in_place(s, InputEvent::advance());
            } else if (roll < 19) {
                apply_input_in_place(s, InputEvent::select(kDifficultyNames[draw_below(r, 4)]));
            } else {
                apply_input_in_place(s, InputEvent::restart());
            }
            step_in_place(s);
            const ClientView view = take_snapshot(s);
            ++snapshots;
            const double radius = s.difficulty.searchlight_radius;
            for (const VisibleCell& v : view.visible) {
                leaks += inside(view.hero, v.cell.col, v.cell.row, radius) ? 0 : 1;
            }
            if (view.monster) {
                leaks += inside(view.hero, view.monster->col, view.monster->row, radius) ? 0 : 1;
            }
            // completeness: the lit disc is exactly what brute force counts
            if (static_cast<int>(view.visible.size()) !=
                oracle::disc_count(s.maze.width(), s.maze.height(), view.hero.col, view.hero.row,
                                   radius)) {
                ++leaks;
            }
            cells += static_cast<long>(view.visible.size());
        }
    }

    long frames = 0;
    const char* dirs[] = {"N", "E", "S", "W"};
    while (frames < kFogFrames) {
        ProtocolSession p(GameConfig{}, draw(r));
        const auto name = difficulty_token(kDifficultyNames[draw_below(r, 4)]);
        p.handle_message(nlohmann::json{{"type", "start"}, {"difficulty", name}}.dump());
        for (int i = 0; i < 100 && frames < kFogFrames; ++i) {
            const auto roll = draw_below(r, 10);
            if (roll < 8) {
                p.handle_message(
                    nlohmann::json{{"type", "input"}, {"dir", dirs[draw_below(r, 4)]}}.dump());
            } else if (roll < 9) {
                p.handle_message(R"({"type":"advance"})");
            } else {
                p.handle_message(R"({"type":"restart"})");
            }
            const auto frame = p.tick();
            if (!frame) {
                ++leaks;
                continue;
            }
            ++frames;
            const auto state = nlohmann::json::parse(*frame);
            const Position hero{state["hero"][0].get<int>(), state["hero"][1].get<int>()};
            const double radius = p.session()->difficulty.searchlight_radius;
            for (const auto& cell : state["visible"]) {
                leaks += inside(hero, cell[0].get<int>(), cell[1].get<int>(), radius) ? 0 : 1;
            }
            if (!state["monster"].is_null()) {
                leaks += inside(hero, state["monster"][0].get<int>(), state["monster"][1].get<int>(),
                                radius)
                             ? 0
                             : 1;
            }
        }
    }
    return {leaks == 0, std::to_string(leaks) + " leaks over " + std::to_string(snapshots) +
                            " snapshots (" + std::to_string(cells) + " lit cells) and " +
                            std::to_string(frames) + " protocol frames"};
}

// The monster moves on ticks 0, p, 2p, ... so D steps end on tick (D-1)p and
// the clock then reads (D-1)p+1. The reference figure D*p differs from that by
// p-1, inside the allowed one-period band.
Result pursuit()
{
    Rng r{0x5EED0005};
    int exact = 0;
    int within = 0;
    int worst = 0;
    for (int i = 0; i < kPursuitMazes; ++i) {
        GameConfig config;
        config.level1_width = 3 + static_cast<int>(draw_below(r, 25));
        config.level1_height = 3 + static_cast<int>(draw_below(r, 25));
        const DifficultyName name = kDifficultyNames[i % 4];
        config.brain_per_difficulty[static_cast<std::size_t>(name)] = BrainKind::BfsChase;
        Session s = new_session(config, draw(r));
        apply_input_in_place(s, InputEvent::advance());
        apply_input_in_place(s, InputEvent::select(name));
        const auto g = oracle::Grid::of(s.maze);
        const int d = oracle::bfs(g, s.monster.col, s.monster.row)[static_cast<std::size_t>(s.hero.row * g.width + s.hero.col)];
        const std::int64_t p = s.difficulty.monster_step_period;
        while (s.phase == Phase::Playing && s.tick < kEpisodeTickCap) {
            step_in_place(s);
        }
        const std::int64_t derived = (d - 1) * p + 1;
        const std::int64_t reference = d * p;
        exact += (s.phase == Phase::GameOver && s.tick == derived) ? 1 : 0;
        const auto off = std::llabs(s.tick - reference);
        within += (s.phase == Phase::GameOver && off <= p) ? 1 : 0;
        worst = std::max(worst, static_cast<int>(off));
    }
    return {within == kPursuitMazes && exact == kPursuitMazes,
            std::to_string(within) + "/" + std::to_string(kPursuitMazes) +
                " within one period of D*p (worst offset " + std::to_string(worst) + "), " +
                std::to_string(exact) + "/" + std::to_string(kPursuitMazes) + " at exactly (D-1)p+1"};
}

Result brain_ordering()
{
    const auto start = Clock::now();
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    const auto rate = [&](BrainKind brain) {
        BatchRequest req;
        req.difficulty = DifficultyName::Medium;
        req.brain = brain;
        req.hero = HeroPolicyKind::BfsToExit;
        req.episodes = kBrainEpisodes;
        req.base_seed = 0x5EED0006;
        req.threads = threads;
        return run_batch(req).capture_rate;
    };
    const double bfs = rate(BrainKind::BfsChase);
    const double greedy = rate(BrainKind::GreedyChase);
    const double random = rate(BrainKind::RandomWalk);
    const double t = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "capture rates bfs_chase %.3f, greedy_chase %.3f, random_walk %.3f, %.2fs "
                  "(limit 60s)",
                  bfs, greedy, random, t);
    return {bfs > greedy && greedy > random && t < kBrainOrderingSeconds, buf};
}

Result difficulty_monotonicity()
{
    bool ok = !difficulty_table_violation(resolve_config(PropertyMap{}).config.difficulty_table);
    int rejected = 0;
    const std::vector<std::pair<std::string, std::string>> overrides = {
        {"difficulty.medium.searchlight", "7"},  {"difficulty.easy.searchlight", "9"},
        {"difficulty.difficult.searchlight", "4"}, {"difficulty.medium.period", "5"},
        {"difficulty.super_easy.period", "2"},   {"difficulty.difficult.period", "3"},
    };
    for (const auto& [key, value] : overrides) {
        PropertyMap p;
        p.add(key, value);
        try {
            resolve_config(p);
        } catch (const ConfigError&) {
            ++rejected;
        }
    }
    PropertyMap fine;
    fine.add("difficulty.medium.searchlight", "5");
    try {
        resolve_config(fine);
    } catch (const ConfigError&) {
        ok = false;
    }
    return {ok && rejected == static_cast<int>(overrides.size()),
            std::string("default table ") + (ok ? "monotone" : "NOT monotone") + ", " +
                std::to_string(rejected) + "/" + std::to_string(overrides.size()) +
                " violating overrides rejected"};
}

Result properties_round_trip()
{
    Rng r{0x5EED0007};
    const std::string key_chars = "abcdefxyz0129._-";
    const std::string value_chars = "abc XYZ=#:/.\t019";
    int survived = 0;
    for (int trial = 0; trial < kRoundTripMaps; ++trial) {
        PropertyMap map;
        const auto n = draw_below(r, 10);
        for (std::uint64_t i = 0; i < n; ++i) {
            std::string key(1 + draw_below(r, 12), 'k');
            for (char& ch : key) {
                ch = key_chars[draw_below(r, key_chars.size())];
            }
            std::string value(draw_below(r, 16), 'v');
            for (char& ch : value) {
                ch = value_chars[draw_below(r, value_chars.size())];
            }
            // values are stored trimmed, as the parser would read them
            const auto first = value.find_first_not_of(" \t");
            value = first == std::string::npos ? "" : value.substr(first);
            value = value.substr(0, value.find_last_not_of(" \t") + 1);
            map.add(key, value);
        }
        survived += parse_properties(serialize_properties(map)) == map ? 1 : 0;
    }

    struct Case {
        std::string text;
        int line;
    };
    const std::vector<Case> cases = {
        {"orphan line", 1},
        {"a=1\n= value\n", 2},
        {"a=1\n\n# comment\nb=2\nno separator here\n", 5},
    };
    int numbered = 0;
    for (const Case& c : cases) {
        try {
            parse_properties(c.text);
        } catch (const PropertiesParseError& e) {
            const std::string prefix = "line " + std::to_string(c.line) + ":";
            numbered += (e.line() == c.line && std::string(e.what()).rfind(prefix, 0) == 0) ? 1 : 0;
        }
    }
    return {survived == kRoundTripMaps && numbered == static_cast<int>(cases.size()),
            std::to_string(survived) + "/" + std::to_string(kRoundTripMaps) + " maps survive, " +
                std::to_string(numbered) + "/3 parse errors carry the right line"};
}

Result golden_episode()
{
    GameConfig config;
    config.level1_width = 2;
    config.level1_height = 1;
    const std::string golden = oracle::read_golden("episode_2x1_difficult.txt");
    const std::string expected = transcript::strip_comments(golden);
    const std::string actual = transcript::run(config, 42, transcript::parse_script(golden));
    const auto want = transcript::event_lines(expected);
    const auto got = transcript::event_lines(actual);
    return {actual == expected, std::to_string(got.size()) + " events produced, " +
                                    std::to_string(want.size()) + " expected, transcript " +
                                    (actual == expected ? "identical" : "differs")};
}

} // namespace

// `--expect-fail NAME` marks a criterion whose failure is understood and
// recorded. Its FAIL line is still printed; only the exit status changes, and a
// surprise PASS on such a criterion fails the run so the list stays honest.
int main(int argc, char** argv)
{
    std::set<std::string> expected_failures;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--expect-fail" && i + 1 < argc) {
            expected_failures.insert(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--expect-fail NAME]...\n";
            return 2;
        }
    }

    const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
        {"maze perfectness", maze_perfectness},
        {"maze uniqueness", maze_uniqueness},
        {"determinism", determinism},
        {"fog soundness", fog_soundness},
        {"pursuit correctness", pursuit},
        {"brain ordering", brain_ordering},
        {"difficulty monotonicity", difficulty_monotonicity},
        {"properties round-trip", properties_round_trip},
        {"golden episode", golden_episode},
    };
    int failures = 0;
    int unexpected = 0;
    for (const auto& [name, run] : criteria) {
        Result result;
        try {
            result = run();
        } catch (const std::exception& e) {
            result = {false, std::string("threw: ") + e.what()};
        }
        const bool known = expected_failures.count(name) > 0;
        failures += result.pass ? 0 : 1;
        unexpected += (result.pass == known) ? 1 : 0;
        std::cout << (result.pass ? "PASS " : "FAIL ") << name << ": " << result.detail
                  << (known ? (result.pass ? " [expected to fail, passed]" : " [known failure]") : "")
                  << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return unexpected == 0 ? 0 : 1;
}
