#include "labyrinth/replay.hpp"

#include <charconv>
#include <sstream>

namespace labyrinth {

namespace {

constexpr std::string_view kMagic = "labyrinth-replay v1";

template <typename Int>
std::optional<Int> parse_integer(std::string_view text, int base = 10)
{
    Int out{};
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out, base);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return out;
}

std::vector<std::string_view> split_spaces(std::string_view line)
{
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const std::size_t start = line.find_first_not_of(' ', pos);
        if (start == std::string_view::npos) {
            break;
        }
        const std::size_t end = std::min(line.find(' ', start), line.size());
        parts.push_back(line.substr(start, end - start));
        pos = end;
    }
    return parts;
}

std::string_view field_value(std::string_view part, std::string_view key)
{
    if (part.size() > key.size() && part.substr(0, key.size()) == key && part[key.size()] == '=') {
        return part.substr(key.size() + 1);
    }
    return {};
}

} // namespace

Session run_replay(const GameConfig& config, std::uint64_t seed,
                   const std::vector<LoggedInput>& log, std::optional<std::int64_t> final_tick)
{
    std::int64_t previous = 0;
    for (const LoggedInput& in : log) {
        if (in.tick < 0) {
            throw ReplayFormatError("negative tick " + std::to_string(in.tick));
        }
        if (in.tick < previous) {
            throw ReplayFormatError("ticks out of order at " + std::to_string(in.tick));
        }
        previous = in.tick;
    }

    Session s = new_session(config, seed);
    const auto run_until = [&s](std::int64_t target) {
        while (s.tick < target && s.phase == Phase::Playing) {
            step_in_place(s);
        }
        return s.tick == target;
    };
    for (const LoggedInput& in : log) {
        if (!run_until(in.tick)) {
            throw ReplayFormatError("tick " + std::to_string(in.tick) +
                                    " is unreachable from phase " +
                                    std::string(phase_token(s.phase)));
        }
        apply_input_in_place(s, in.event);
    }
    if (final_tick) {
        run_until(*final_tick);
    }
    return s;
}

ReplayFile record_replay(const Session& s)
{
    ReplayFile out;
    out.seed = s.base_seed;
    out.difficulty = s.difficulty.name;
    out.levels = s.config.max_level;
    out.final_tick = s.tick;
    out.inputs = s.input_log;
    out.digest = state_digest(s);
    return out;
}

std::string format_input(const InputEvent& e)
{
    switch (e.kind) {
    case InputEvent::Kind::Key: return std::string("key ") + direction_letter(e.direction);
    case InputEvent::Kind::Advance: return "advance";
    case InputEvent::Kind::SelectDifficulty:
        return "select " + std::string(difficulty_token(e.difficulty));
    case InputEvent::Kind::Restart: return "restart";
    }
    return "advance";
}

std::optional<InputEvent> parse_input(std::string_view text)
{
    const auto parts = split_spaces(text);
    if (parts.size() == 1 && parts[0] == "advance") {
        return InputEvent::advance();
    }
    if (parts.size() == 1 && parts[0] == "restart") {
        return InputEvent::restart();
    }
    if (parts.size() == 2 && parts[0] == "key") {
        if (const auto d = parse_direction_letter(parts[1])) {
            return InputEvent::key(*d);
        }
    }
    if (parts.size() == 2 && parts[0] == "select") {
        if (const auto name = parse_difficulty(parts[1])) {
            return InputEvent::select(*name);
        }
    }
    return std::nullopt;
}

std::string format_replay(const ReplayFile& replay)
{
    std::ostringstream out;
    out << kMagic << " seed=" << replay.seed << " difficulty=" << difficulty_token(replay.difficulty)
        << " levels=" << replay.levels;
    if (replay.final_tick) {
        out << " ticks=" << *replay.final_tick;
    }
    out << '\n';
    for (const LoggedInput& in : replay.inputs) {
        out << ':' << in.tick << ' ' << format_input(in.event) << '\n';
    }
    out << "#digest " << digest_hex(replay.digest) << '\n';
    return out.str();
}

ReplayFile parse_replay(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty()) {
            lines.push_back(line);
        }
        pos = end + 1;
    }
    if (lines.size() < 2) {
        throw ReplayFormatError("replay needs a header and a digest line");
    }

    ReplayFile out;
    const std::string_view header = lines.front();
    if (header.substr(0, kMagic.size()) != kMagic) {
        throw ReplayFormatError("missing 'labyrinth-replay v1' header");
    }
    bool have_seed = false;
    bool have_difficulty = false;
    bool have_levels = false;
    for (std::string_view part : split_spaces(header.substr(kMagic.size()))) {
        if (auto v = field_value(part, "seed"); !v.empty()) {
            const auto seed = parse_integer<std::uint64_t>(v);
            if (!seed) {
                throw ReplayFormatError("bad seed '" + std::string(v) + "'");
            }
            out.seed = *seed;
            have_seed = true;
        } else if (auto v = field_value(part, "difficulty"); !v.empty()) {
            const auto name = parse_difficulty(v);
            if (!name) {
                throw ReplayFormatError("unknown difficulty '" + std::string(v) + "'");
            }
            out.difficulty = *name;
            have_difficulty = true;
        } else if (auto v = field_value(part, "levels"); !v.empty()) {
            const auto levels = parse_integer<int>(v);
            if (!levels || *levels < 1) {
                throw ReplayFormatError("bad levels '" + std::string(v) + "'");
            }
            out.levels = *levels;
            have_levels = true;
        } else if (auto v = field_value(part, "ticks"); !v.empty()) {
            const auto ticks = parse_integer<std::int64_t>(v);
            if (!ticks || *ticks < 0) {
                throw ReplayFormatError("bad ticks '" + std::string(v) + "'");
            }
            out.final_tick = *ticks;
        } else {
            throw ReplayFormatError("unexpected header field '" + std::string(part) + "'");
        }
    }
    if (!have_seed || !have_difficulty || !have_levels) {
        throw ReplayFormatError("header must carry seed, difficulty and levels");
    }

    const std::string_view digest_line = lines.back();
    constexpr std::string_view kDigest = "#digest ";
    if (digest_line.substr(0, kDigest.size()) != kDigest) {
        throw ReplayFormatError("last line must be '#digest <hex>'");
    }
    const auto digest = parse_integer<std::uint64_t>(digest_line.substr(kDigest.size()), 16);
    if (!digest) {
        throw ReplayFormatError("bad digest '" + std::string(digest_line) + "'");
    }
    out.digest = *digest;

    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
        const std::string_view line = lines[i];
        const auto space = line.find(' ');
        if (line.front() != ':' || space == std::string_view::npos) {
            throw ReplayFormatError("line " + std::to_string(i + 1) + ": expected ':<tick> <event>'");
        }
        const std::string_view tick_text = line.substr(1, space - 1);
        const auto tick = parse_integer<std::int64_t>(tick_text);
        if (!tick) {
            throw ReplayFormatError("line " + std::to_string(i + 1) + ": bad tick '" +
                                    std::string(tick_text) + "'");
        }
        if (*tick < 0) {
            throw ReplayFormatError("line " + std::to_string(i + 1) + ": negative tick");
        }
        const auto event = parse_input(line.substr(space + 1));
        if (!event) {
            throw ReplayFormatError("line " + std::to_string(i + 1) + ": unknown event '" +
                                    std::string(line.substr(space + 1)) + "'");
        }
        if (!out.inputs.empty() && *tick < out.inputs.back().tick) {
            throw ReplayFormatError("line " + std::to_string(i + 1) + ": ticks out of order");
        }
        out.inputs.push_back({*tick, *event});
    }
    return out;
}

ReplayVerdict verify_replay(const ReplayFile& replay, GameConfig config)
{
    config.max_level = replay.levels;
    ReplayVerdict verdict{false, replay.digest, 0,
                          run_replay(config, replay.seed, replay.inputs, replay.final_tick)};
    verdict.actual = state_digest(verdict.final_state);
    verdict.matches = verdict.actual == verdict.expected &&
                      verdict.final_state.difficulty.name == replay.difficulty;
    return verdict;
}

} // namespace labyrinth
