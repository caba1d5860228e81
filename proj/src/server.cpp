#include "labyrinth/server.hpp"

#include "labyrinth/protocol.hpp"

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include <chrono>
#include <deque>

namespace labyrinth {

namespace beast = boost::beast;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

namespace {

class Connection : public std::enable_shared_from_this<Connection> {
public:
    Connection(tcp::socket socket, const GameConfig& config, std::uint64_t seed,
               std::chrono::nanoseconds period)
        : ws_(std::move(socket)),
          timer_(ws_.get_executor()),
          protocol_(config, seed),
          period_(period)
    {
    }

    void start()
    {
        ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
        ws_.async_accept([self = shared_from_this()](beast::error_code ec) {
            if (!ec) {
                self->read_next();
                self->next_deadline_ = std::chrono::steady_clock::now() + self->period_;
                self->schedule_tick();
            }
        });
    }

private:
    void read_next()
    {
        ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
            self->on_read(ec);
        });
    }

    void on_read(beast::error_code ec)
    {
        if (ec) {
            closed_ = true;
            timer_.cancel();
            return;
        }
        const std::string text = beast::buffers_to_string(buffer_.data());
        buffer_.consume(buffer_.size());
        for (std::string& reply : protocol_.handle_message(text)) {
            send(std::move(reply));
        }
        read_next();
    }

    void schedule_tick()
    {
        timer_.expires_at(next_deadline_);
        timer_.async_wait([self = shared_from_this()](beast::error_code ec) {
            if (ec || self->closed_) {
                return;
            }
            self->next_deadline_ += self->period_;
            if (auto frame = self->protocol_.tick()) {
                self->send(std::move(*frame));
            }
            self->schedule_tick();
        });
    }

    void send(std::string frame)
    {
        outbox_.push_back(std::move(frame));
        if (!writing_) {
            write_next();
        }
    }

    void write_next()
    {
        writing_ = true;
        ws_.text(true);
        ws_.async_write(net::buffer(outbox_.front()),
                        [self = shared_from_this()](beast::error_code ec, std::size_t) {
                            self->outbox_.pop_front();
                            if (ec) {
                                self->closed_ = true;
                                self->timer_.cancel();
                                return;
                            }
                            if (self->outbox_.empty()) {
                                self->writing_ = false;
                            } else {
                                self->write_next();
                            }
                        });
    }

    websocket::stream<beast::tcp_stream> ws_;
    net::steady_timer timer_;
    ProtocolSession protocol_;
    std::chrono::nanoseconds period_;
    std::chrono::steady_clock::time_point next_deadline_;
    beast::flat_buffer buffer_;
    std::deque<std::string> outbox_;
    bool writing_ = false;
    bool closed_ = false;
};

} // namespace

struct SessionServer::Impl {
    Impl(GameConfig cfg, ServerOptions opts)
        : config(std::move(cfg)), options(opts), acceptor(io)
    {
        validate_config(config);
        if (!(options.tick_rate > 0.0)) {
            throw ServerError("tick rate must be positive");
        }
        period = std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::duration<double>(1.0 / options.tick_rate));

        beast::error_code ec;
        const tcp::endpoint endpoint(net::ip::make_address("0.0.0.0"), options.port);
        acceptor.open(endpoint.protocol(), ec);
        if (!ec) {
            acceptor.set_option(net::socket_base::reuse_address(true), ec);
        }
        if (!ec) {
            acceptor.bind(endpoint, ec);
        }
        if (!ec) {
            acceptor.listen(net::socket_base::max_listen_connections, ec);
        }
        if (ec) {
            throw ServerError("cannot listen on port " + std::to_string(options.port) + ": " +
                              ec.message());
        }
    }

    void accept_next()
    {
        acceptor.async_accept(net::make_strand(io), [this](beast::error_code ec, tcp::socket socket) {
            if (ec) {
                return;
            }
            const std::uint64_t seed = options.seed_base + connections++;
            std::make_shared<Connection>(std::move(socket), config, seed, period)->start();
            accept_next();
        });
    }

    GameConfig config;
    ServerOptions options;
    std::chrono::nanoseconds period{};
    net::io_context io{1};
    tcp::acceptor acceptor;
    std::uint64_t connections = 0;
};

SessionServer::SessionServer(GameConfig config, ServerOptions options)
    : impl_(std::make_unique<Impl>(std::move(config), options))
{
}

SessionServer::~SessionServer() = default;

std::uint16_t SessionServer::port() const noexcept
{
    return impl_->acceptor.local_endpoint().port();
}

void SessionServer::run()
{
    net::signal_set signals(impl_->io);
    if (impl_->options.stop_on_signal) {
        signals.add(SIGINT);
        signals.add(SIGTERM);
        signals.async_wait([this](beast::error_code ec, int) {
            if (!ec) {
                stop();
            }
        });
    }
    impl_->accept_next();
    impl_->io.run();
}

void SessionServer::stop()
{
    net::post(impl_->io, [this] {
        beast::error_code ignored;
        impl_->acceptor.close(ignored);
    });
    impl_->io.stop();
}

} // namespace labyrinth
