// labyrinth: maze generation, batch simulation, replay verification and the
// session server.

#include "labyrinth/config.hpp"
#include "labyrinth/replay.hpp"
#include "labyrinth/server.hpp"
#include "labyrinth/sim.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace labyrinth;

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kDigestMismatch = 3 };

class UsageError : public LabyrinthError {
public:
    using LabyrinthError::LabyrinthError;
};

GameConfig load_config(const std::string& path)
{
    std::filesystem::path file = path;
    if (file.empty()) {
        file = std::string(kDefaultPropertiesPath);
        if (!std::filesystem::exists(file)) {
            return GameConfig{};
        }
    }
    ResolvedConfig resolved = load_config_file(file);
    for (const std::string& key : resolved.warnings) {
        std::cerr << "warning: unknown property '" << key << "' ignored\n";
    }
    return resolved.config;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void print_maze_summary(const Maze& m, std::uint64_t seed)
{
    std::cout << "size " << m.width() << ' ' << m.height() << '\n'
              << "seed " << seed << '\n'
              << "exit " << m.exit().cell.col << ' ' << m.exit().cell.row << ' '
              << direction_letter(m.exit().side) << '\n'
              << "hero " << m.hero_start().col << ' ' << m.hero_start().row << '\n'
              << "monster " << m.monster_start().col << ' ' << m.monster_start().row << '\n';
    for (int row = 0; row < m.height(); ++row) {
        for (int col = 0; col < m.width(); ++col) {
            std::cout << (col ? " " : "") << std::hex << int(m.wall_mask({col, row})) << std::dec;
        }
        std::cout << '\n';
    }
}

template <typename T>
T parse_token(std::optional<T> parsed, const std::string& what, const std::string& token)
{
    if (!parsed) {
        throw UsageError("unknown " + what + " '" + token + "'");
    }
    return *parsed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Labyrinth maze-chase engine"};
    app.require_subcommand(1);

    int width = 13;
    int height = 9;
    std::uint64_t seed = 0;
    bool render = false;
    auto* gen = app.add_subcommand("gen", "Generate a maze and print it");
    gen->add_option("--width", width, "Cells across")->required();
    gen->add_option("--height", height, "Cells down")->required();
    gen->add_option("--seed", seed, "Generator seed")->required();
    gen->add_flag("--render", render, "Draw the maze instead of listing wall masks");

    std::string brain = "bfs_chase";
    std::string hero = "bfs_to_exit";
    std::string difficulty = "medium";
    std::size_t episodes = 100;
    std::string csv_path;
    std::string config_path;
    unsigned threads = 1;
    auto* sim = app.add_subcommand("sim", "Run a batch of headless episodes");
    sim->add_option("--brain", brain, "Monster brain")->required();
    sim->add_option("--hero", hero, "Hero policy: stationary, random_walk, bfs_to_exit")->required();
    sim->add_option("--difficulty", difficulty, "super_easy, easy, medium or difficult")->required();
    sim->add_option("--episodes", episodes, "Episode count")->required();
    sim->add_option("--seed", seed, "Base seed")->required();
    sim->add_option("--csv", csv_path, "Write per-episode rows here");
    sim->add_option("--config", config_path, "Properties file");
    sim->add_option("--threads", threads, "Worker threads");

    std::string replay_path;
    bool verify = false;
    bool record = false;
    std::int64_t ticks = 1000;
    std::uint64_t input_seed = 1;
    auto* replay = app.add_subcommand("replay", "Verify or record a replay file");
    replay->add_option("--file", replay_path, "Replay file")->required();
    auto* verify_flag = replay->add_flag("--verify", verify, "Re-run the file and check its digest");
    auto* record_flag = replay->add_flag("--record", record, "Write a fuzzed session to --file");
    verify_flag->excludes(record_flag);
    replay->add_option("--seed", seed, "Session seed (record)");
    replay->add_option("--ticks", ticks, "Playing ticks to fuzz (record)");
    replay->add_option("--input-seed", input_seed, "Seed for the fuzzed inputs (record)");
    replay->add_option("--config", config_path, "Properties file");

    std::uint16_t port = 8080;
    double tick_rate = 8.0;
    auto* serve = app.add_subcommand("serve", "Host sessions over WebSocket");
    serve->add_option("--port", port, "TCP port")->required();
    serve->add_option("--config", config_path, "Properties file");
    serve->add_option("--tick-rate", tick_rate, "Ticks per second");
    serve->add_option("--seed", seed, "Default seed for start messages without one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) {
            const Maze m = generate_maze({width, height, seed});
            if (render) {
                std::cout << render_text(m, m.hero_start(), m.monster_start());
            } else {
                print_maze_summary(m, seed);
            }
            return kOk;
        }

        if (*sim) {
            BatchRequest request;
            request.config = load_config(config_path);
            request.brain = parse_token(parse_brain(brain), "brain", brain);
            request.hero = parse_token(parse_hero_policy(hero), "hero policy", hero);
            request.difficulty = parse_token(parse_difficulty(difficulty), "difficulty", difficulty);
            request.episodes = episodes;
            request.base_seed = seed;
            request.threads = threads;
            const BatchStats stats = run_batch(request);
            std::cout << "episodes " << stats.episodes << '\n'
                      << "captures " << stats.captures << '\n'
                      << "escapes " << stats.escapes << " (timeouts " << stats.timeouts << ")\n"
                      << "capture_rate " << stats.capture_rate << '\n'
                      << "mean_ticks " << stats.mean_ticks << '\n'
                      << "digest " << digest_hex(batch_digest(stats)) << '\n';
            if (!csv_path.empty()) {
                std::ofstream out(csv_path, std::ios::binary);
                out << batch_csv(stats);
                if (!out) {
                    throw UsageError("cannot write " + csv_path);
                }
            }
            return kOk;
        }

        if (*replay) {
            const GameConfig config = load_config(config_path);
            if (record) {
                const Session s = run_fuzz_session(config, seed, ticks, input_seed);
                std::ofstream out(replay_path, std::ios::binary);
                out << format_replay(record_replay(s));
                if (!out) {
                    throw UsageError("cannot write " + replay_path);
                }
                std::cout << "recorded " << s.input_log.size() << " inputs, " << s.tick
                          << " ticks, digest " << digest_hex(state_digest(s)) << '\n';
                return kOk;
            }
            if (!verify) {
                throw UsageError("replay needs --verify or --record");
            }
            const ReplayVerdict verdict = verify_replay(parse_replay(read_file(replay_path)), config);
            std::cout << "expected " << digest_hex(verdict.expected) << '\n'
                      << "actual   " << digest_hex(verdict.actual) << '\n';
            if (!verdict.matches) {
                std::cout << "MISMATCH\n";
                return kDigestMismatch;
            }
            std::cout << "OK\n";
            return kOk;
        }

        if (*serve) {
            SessionServer server(load_config(config_path), {port, tick_rate, seed, true});
            std::cout << "serving on port " << server.port() << " at " << tick_rate
                      << " ticks/s" << std::endl;
            server.run();
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const LabyrinthError& e) {
        // config, properties, replay format, server startup
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kUsage;
}
