#pragma once

#include "labyrinth/config.hpp"

#include <cstdint>
#include <memory>

namespace labyrinth {

class ServerError : public LabyrinthError {
public:
    using LabyrinthError::LabyrinthError;
};

struct ServerOptions {
    /// 0 asks the OS for a free port; read it back with SessionServer::port().
    std::uint16_t port = 8080;
    double tick_rate = 8.0;
    /// Seed for `start` messages that omit one; each connection gets the next value.
    std::uint64_t seed_base = 0;
    /// SIGINT/SIGTERM end run().
    bool stop_on_signal = false;
};

/// WebSocket host. One connection owns one ProtocolSession; frames are the
/// JSON messages of the client protocol.
class SessionServer {
public:
    /// Binds and listens. Throws ServerError if the port cannot be bound.
    SessionServer(GameConfig config, ServerOptions options);
    ~SessionServer();

    SessionServer(const SessionServer&) = delete;
    SessionServer& operator=(const SessionServer&) = delete;

    std::uint16_t port() const noexcept;

    /// Serves until stop() is called.
    void run();

    /// Thread-safe.
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace labyrinth
