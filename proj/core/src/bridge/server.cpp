// Copyright 2026 The touchboard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <touchboard/bridge/server.hpp>

#include <touchboard/bridge/protocol.hpp>

#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/steady_timer.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/version.hpp>
#include <boost/beast/websocket.hpp>

#include <json.hpp>

#include <atomic>
#include <deque>
#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

namespace touchboard::bridge {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

namespace {

using shared_message = std::shared_ptr<const std::string>;

class hub;

// Outbound queue per client. At most one unsent Frame is kept: a newer
// frame replaces it, so a slow reader loses frames instead of stalling
// the device or its peers.
class ws_session : public std::enable_shared_from_this<ws_session>
{
public:
  static constexpr std::size_t max_queued_text = 256;

  ws_session(tcp::socket socket, hub& owner)
    : m_ws(std::move(socket))
    , m_hub(owner)
  {
  }

  void start(http::request<http::string_body> req);
  void send_text(shared_message msg) { enqueue(std::move(msg), false); }
  void send_frame(shared_message msg) { enqueue(std::move(msg), true); }
  void close();

private:
  struct outgoing
  {
    shared_message data;
    bool binary;
  };

  void on_accept(beast::error_code ec);
  void do_read();
  void on_read(beast::error_code ec, std::size_t bytes);
  void enqueue(shared_message msg, bool binary);
  void do_write();
  void on_write(beast::error_code ec, std::size_t bytes);

  websocket::stream<beast::tcp_stream> m_ws;
  hub& m_hub;
  beast::flat_buffer m_buffer;
  std::deque<outgoing> m_queue;
  bool m_writing = false;
  bool m_open = false;
};

class hub
{
public:
  hub(asio::io_context& io, const server_options& options)
    : m_io(io)
    , m_options(options)
    , m_device(options.device)
    , m_tick_timer(io)
    , m_publish_timer(io)
  {
  }

  void start()
  {
    publish(true);
    schedule_tick();
    schedule_publish();
  }

  void stop()
  {
    m_stopped = true;
    m_tick_timer.cancel();
    m_publish_timer.cancel();
    for (const auto& weak : std::set(m_sessions)) {
      if (auto s = weak.lock()) {
        s->close();
      }
    }
  }

  void join(const std::shared_ptr<ws_session>& s)
  {
    m_sessions.insert(s);
    s->send_text(m_status);
    s->send_text(m_sevenseg);
    s->send_frame(m_frame);
  }

  void leave(const std::shared_ptr<ws_session>& s) { m_sessions.erase(s); }

  void inbound(const std::shared_ptr<ws_session>& from, std::string_view text, bool binary)
  {
    if (binary) {
      from->send_text(std::make_shared<const std::string>(
        encode_error({ "payload", "binary messages are not accepted" })));
      return;
    }
    auto parsed = parse_inbound(text);
    if (parsed.error) {
      from->send_text(std::make_shared<const std::string>(encode_error(*parsed.error)));
      return;
    }
    m_pending.push_back(to_device_input(*parsed.msg));
  }

  [[nodiscard]] std::string health() const
  {
    nlohmann::json j;
    j["status"] = "ok";
    j["power"] = std::string(to_string(m_device.power()));
    j["frame_seq"] = m_frame_seq;
    j["tick"] = m_device.tick_count();
    j["clients"] = m_sessions.size();
    return j.dump();
  }

private:
  void schedule_tick()
  {
    if (m_stopped) {
      return;
    }
    m_tick_timer.expires_after(m_options.tick_period);
    m_tick_timer.async_wait([this](beast::error_code ec) {
      if (ec || m_stopped) {
        return;
      }
      // One device step per queued message; an idle step when there is none.
      if (m_pending.empty()) {
        m_device.step();
      }
      while (!m_pending.empty()) {
        m_device.step(m_pending.front());
        m_pending.pop_front();
      }
      schedule_tick();
    });
  }

  void schedule_publish()
  {
    if (m_stopped) {
      return;
    }
    const auto fps = std::max(1U, m_options.max_fps);
    m_publish_timer.expires_after(std::chrono::microseconds(1'000'000 / fps));
    m_publish_timer.async_wait([this](beast::error_code ec) {
      if (ec || m_stopped) {
        return;
      }
      publish(false);
      schedule_publish();
    });
  }

  void publish(bool initial)
  {
    const auto hash = m_device.fb().content_hash();
    if (initial || hash != m_frame_hash) {
      m_frame_hash = hash;
      m_frame = std::make_shared<const std::string>(encode_frame(++m_frame_seq, m_device.fb()));
      broadcast(m_frame, true);
    }
    auto status = encode_status(m_device);
    if (initial || status != *m_status) {
      m_status = std::make_shared<const std::string>(std::move(status));
      broadcast(m_status, false);
    }
    auto digits = encode_sevenseg(m_device.digits());
    if (initial || digits != *m_sevenseg) {
      m_sevenseg = std::make_shared<const std::string>(std::move(digits));
      broadcast(m_sevenseg, false);
    }
  }

  void broadcast(const shared_message& msg, bool binary)
  {
    for (const auto& weak : std::set(m_sessions)) {
      if (auto s = weak.lock()) {
        binary ? s->send_frame(msg) : s->send_text(msg);
      }
    }
  }

  asio::io_context& m_io;
  server_options m_options;
  device m_device;
  std::deque<device_input> m_pending;
  asio::steady_timer m_tick_timer;
  asio::steady_timer m_publish_timer;
  std::set<std::weak_ptr<ws_session>, std::owner_less<std::weak_ptr<ws_session>>> m_sessions;
  std::uint64_t m_frame_seq = 0;
  std::uint64_t m_frame_hash = 0;
  shared_message m_frame = std::make_shared<const std::string>();
  shared_message m_status = std::make_shared<const std::string>();
  shared_message m_sevenseg = std::make_shared<const std::string>();
  bool m_stopped = false;
};

void ws_session::start(http::request<http::string_body> req)
{
  m_ws.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
  m_ws.read_message_max(64 * 1024);
  m_ws.async_accept(req, beast::bind_front_handler(&ws_session::on_accept, shared_from_this()));
}

void ws_session::on_accept(beast::error_code ec)
{
  if (ec) {
    return;
  }
  m_open = true;
  m_hub.join(shared_from_this());
  do_read();
}

void ws_session::do_read()
{
  m_ws.async_read(m_buffer, beast::bind_front_handler(&ws_session::on_read, shared_from_this()));
}

void ws_session::on_read(beast::error_code ec, std::size_t)
{
  if (ec) {
    m_open = false;
    m_hub.leave(shared_from_this());
    return;
  }
  const auto data = beast::buffers_to_string(m_buffer.data());
  m_buffer.consume(m_buffer.size());
  m_hub.inbound(shared_from_this(), data, !m_ws.got_text());
  do_read();
}

void ws_session::enqueue(shared_message msg, bool binary)
{
  if (!m_open || !msg || msg->empty()) {
    return;
  }
  // The head of the queue may be in flight; only later entries are
  // replaceable or droppable.
  const std::size_t first_idle = m_writing ? 1 : 0;
  if (binary) {
    for (std::size_t i = first_idle; i < m_queue.size(); ++i) {
      if (m_queue[i].binary) {
        m_queue.erase(m_queue.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
    }
  } else {
    std::size_t text = 0;
    for (std::size_t i = first_idle; i < m_queue.size(); ++i) {
      text += m_queue[i].binary ? 0 : 1;
    }
    if (text >= max_queued_text) {
      for (std::size_t i = first_idle; i < m_queue.size(); ++i) {
        if (!m_queue[i].binary) {
          m_queue.erase(m_queue.begin() + static_cast<std::ptrdiff_t>(i));
          break;
        }
      }
    }
  }
  m_queue.push_back({ std::move(msg), binary });
  if (!m_writing) {
    do_write();
  }
}

void ws_session::do_write()
{
  if (m_queue.empty() || !m_open) {
    m_writing = false;
    return;
  }
  m_writing = true;
  auto& head = m_queue.front();
  m_ws.binary(head.binary);
  m_ws.async_write(asio::buffer(*head.data),
                   beast::bind_front_handler(&ws_session::on_write, shared_from_this()));
}

void ws_session::on_write(beast::error_code ec, std::size_t)
{
  m_queue.pop_front();
  if (ec) {
    m_open = false;
    m_writing = false;
    m_queue.clear();
    m_hub.leave(shared_from_this());
    return;
  }
  do_write();
}

void ws_session::close()
{
  if (!m_open) {
    return;
  }
  m_open = false;
  m_ws.async_close(websocket::close_code::going_away,
                   [self = shared_from_this()](beast::error_code) {});
}

std::string_view mime_type(const std::filesystem::path& p)
{
  const auto ext = p.extension().string();
  if (ext == ".html" || ext == ".htm") {
    return "text/html; charset=utf-8";
  }
  if (ext == ".js" || ext == ".mjs") {
    return "text/javascript";
  }
  if (ext == ".css") {
    return "text/css";
  }
  if (ext == ".json" || ext == ".map") {
    return "application/json";
  }
  if (ext == ".svg") {
    return "image/svg+xml";
  }
  if (ext == ".png") {
    return "image/png";
  }
  if (ext == ".ico") {
    return "image/x-icon";
  }
  return "application/octet-stream";
}

class http_session : public std::enable_shared_from_this<http_session>
{
public:
  http_session(tcp::socket socket, hub& owner, const server_options& options)
    : m_stream(std::move(socket))
    , m_hub(owner)
    , m_options(options)
  {
  }

  void start() { do_read(); }

private:
  void do_read()
  {
    m_req = {};
    m_stream.expires_after(std::chrono::seconds(30));
    http::async_read(m_stream, m_buffer, m_req,
                     beast::bind_front_handler(&http_session::on_read, shared_from_this()));
  }

  void on_read(beast::error_code ec, std::size_t)
  {
    if (ec) {
      return;
    }
    if (websocket::is_upgrade(m_req)) {
      if (m_req.target() == "/ws") {
        m_stream.expires_never();
        std::make_shared<ws_session>(m_stream.release_socket(), m_hub)->start(std::move(m_req));
        return;
      }
      respond(text_response(http::status::not_found, "websocket endpoint is /ws\n"));
      return;
    }
    respond(handle());
  }

  http::response<http::string_body> text_response(http::status status,
                                                   std::string body,
                                                   std::string_view type = "text/plain")
  {
    http::response<http::string_body> res{ status, m_req.version() };
    res.set(http::field::server, "touchboard-bridge");
    res.set(http::field::content_type, std::string(type));
    res.keep_alive(m_req.keep_alive());
    res.body() = std::move(body);
    res.prepare_payload();
    return res;
  }

  http::response<http::string_body> handle()
  {
    if (m_req.method() != http::verb::get && m_req.method() != http::verb::head) {
      return text_response(http::status::method_not_allowed, "GET only\n");
    }
    std::string target(m_req.target());
    if (const auto q = target.find('?'); q != std::string::npos) {
      target.resize(q);
    }
    if (target == "/healthz") {
      return text_response(http::status::ok, m_hub.health() + "\n", "application/json");
    }
    if (m_options.static_dir.empty() || target.empty() || target.front() != '/' ||
        target.find("..") != std::string::npos) {
      return text_response(http::status::not_found, "not found\n");
    }
    if (target.back() == '/') {
      target += "index.html";
    }
    const auto path = m_options.static_dir / target.substr(1);
    std::ifstream in(path, std::ios::binary);
    if (!in || std::filesystem::is_directory(path)) {
      return text_response(http::status::not_found, "not found\n");
    }
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text_response(http::status::ok, std::move(body), mime_type(path));
  }

  void respond(http::response<http::string_body> res)
  {
    auto shared = std::make_shared<http::response<http::string_body>>(std::move(res));
    http::async_write(m_stream, *shared,
                      [self = shared_from_this(), shared](beast::error_code ec, std::size_t) {
                        if (ec || !shared->keep_alive()) {
                          beast::error_code ignored;
                          self->m_stream.socket().shutdown(tcp::socket::shutdown_send, ignored);
                          return;
                        }
                        self->do_read();
                      });
  }

  beast::tcp_stream m_stream;
  beast::flat_buffer m_buffer;
  http::request<http::string_body> m_req;
  hub& m_hub;
  const server_options& m_options;
};

}  // namespace

struct server::impl
{
  explicit impl(server_options opts)
    : options(std::move(opts))
    , acceptor(io)
    , owner(io, options)
  {
  }

  void do_accept()
  {
    acceptor.async_accept([this](beast::error_code ec, tcp::socket socket) {
      if (ec) {
        return;
      }
      std::make_shared<http_session>(std::move(socket), owner, options)->start();
      do_accept();
    });
  }

  server_options options;
  asio::io_context io{ 1 };
  tcp::acceptor acceptor;
  hub owner;
  std::atomic<std::uint16_t> bound_port{ 0 };
  std::thread thread;
  bool listening = false;
};

server::server(server_options options)
  : m_impl(std::make_unique<impl>(std::move(options)))
{
}

server::~server()
{
  stop();
}

void server::listen()
{
  auto& d = *m_impl;
  beast::error_code ec;
  const auto address = asio::ip::make_address(d.options.address, ec);
  if (ec) {
    throw bind_error("bad listen address '" + d.options.address + "': " + ec.message());
  }
  const tcp::endpoint endpoint{ address, d.options.port };
  d.acceptor.open(endpoint.protocol(), ec);
  if (!ec) {
    d.acceptor.set_option(asio::socket_base::reuse_address(true), ec);
  }
  if (!ec) {
    d.acceptor.bind(endpoint, ec);
  }
  if (!ec) {
    d.acceptor.listen(asio::socket_base::max_listen_connections, ec);
  }
  if (ec) {
    beast::error_code ignored;
    d.acceptor.close(ignored);
    throw bind_error("cannot listen on " + d.options.address + ":" +
                     std::to_string(d.options.port) + ": " + ec.message());
  }
  d.bound_port = d.acceptor.local_endpoint().port();
  d.listening = true;
  d.owner.start();
  d.do_accept();
}

void server::run()
{
  m_impl->io.run();
}

void server::start_background()
{
  if (!m_impl->listening) {
    listen();
  }
  m_impl->thread = std::thread([this] { run(); });
}

void server::stop()
{
  auto& d = *m_impl;
  if (!d.listening) {
    return;
  }
  asio::post(d.io, [&d] {
    beast::error_code ignored;
    d.acceptor.close(ignored);
    d.owner.stop();
  });
  if (d.thread.joinable()) {
    // Give close frames a moment to flush, then end the loop.
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
    d.io.stop();
    d.thread.join();
  } else {
    d.io.stop();
  }
  d.listening = false;
}

std::uint16_t server::port() const noexcept
{
  return m_impl->bound_port;
}

}  // namespace touchboard::bridge
