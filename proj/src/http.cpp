#include <regex>

#include "httplib.h"
#include "lug/error.hpp"
#include "lug/service.hpp"

namespace lug {

namespace {

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidDiagram: return 400;
    case ErrorCode::NotFound: return 404;
    case ErrorCode::OutOfTurn:
    case ErrorCode::StaleVersion: return 409;
    case ErrorCode::IllegalMove:
    case ErrorCode::BoundExceeded:
    case ErrorCode::Inapplicable: return 422;
    case ErrorCode::ContractViolation: return 500;
  }
  return 500;
}

HttpReply error_reply(ErrorCode code, const std::string& message) {
  return {status_for(code), Json{{"error", {{"code", to_string(code)}, {"message", message}}}}};
}

Move move_from(const Json& b) {
  if (!b.contains("crossing") || !b.contains("resolution"))
    throw Error(ErrorCode::InvalidArgument, "move needs crossing and resolution");
  Move m;
  m.crossing = b.at("crossing").get<int>();
  const auto st = parse_state_glyph(b.at("resolution").get<std::string>());
  if (!st || *st == CrossingState::Unresolved)
    throw Error(ErrorCode::InvalidArgument, "resolution must be `/` (A) or `\\` (B)");
  m.resolution = *st;
  return m;
}

}  // namespace

HttpReply handle_request(SessionStore& store, const std::string& method, const std::string& path,
                         const std::string& body) {
  static const std::regex session(R"(^/sessions/([A-Za-z0-9]+)$)");
  static const std::regex sub(R"(^/sessions/([A-Za-z0-9]+)/(moves|hint|analysis)$)");
  try {
    std::smatch m;
    if (path == "/sessions") {
      if (method != "POST") return error_reply(ErrorCode::InvalidArgument, "use POST /sessions");
      const auto req = SessionRequest::from_json(Json::parse(body));
      return {201, store.create(req)};
    }
    if (std::regex_match(path, m, session)) {
      if (method != "GET") return error_reply(ErrorCode::InvalidArgument, "use GET");
      return {200, store.get(m[1])};
    }
    if (std::regex_match(path, m, sub)) {
      const std::string id = m[1];
      const std::string what = m[2];
      if (what == "moves") {
        if (method != "POST") return error_reply(ErrorCode::InvalidArgument, "use POST");
        const auto b = Json::parse(body);
        if (!b.contains("version")) throw Error(ErrorCode::InvalidArgument, "move needs the state version");
        std::optional<Role> role;
        if (b.contains("role")) {
          role = parse_role(b.at("role").get<std::string>());
          if (!role) throw Error(ErrorCode::InvalidArgument, "bad role");
        }
        return {200, store.post_move(id, move_from(b), b.at("version").get<std::size_t>(), role)};
      }
      if (method != "GET") return error_reply(ErrorCode::InvalidArgument, "use GET");
      if (what == "hint") return {200, store.hint(id)};
      return {200, store.analysis(id)};
    }
    return error_reply(ErrorCode::NotFound, "no route " + method + " " + path);
  } catch (const Error& e) {
    return error_reply(e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_reply(ErrorCode::InvalidArgument, std::string("bad JSON: ") + e.what());
  }
}

struct HttpService::Impl {
  httplib::Server server;
};

HttpService::HttpService(SessionStore& store) : impl_(std::make_unique<Impl>()) {
  auto route = [&store](const httplib::Request& req, httplib::Response& res) {
    const auto reply = handle_request(store, req.method, req.path, req.body);
    res.status = reply.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(reply.body.dump(), "application/json");
  };
  auto& server = impl_->server;
  server.Get(R"(/sessions.*)", route);
  server.Post(R"(/sessions.*)", route);
  server.Options(R"(/sessions.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.status = 204;
  });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "cannot listen on " + host + ":" + std::to_string(port));
  return bound;
}

void HttpService::run() { impl_->server.listen_after_bind(); }

void HttpService::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace lug
