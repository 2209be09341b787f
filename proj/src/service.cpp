#include "permdek/service.hpp"

#include <atomic>
#include <cstdint>

#include <httplib.h>
#include "log.hpp"

namespace permdek::service {

namespace {

RequestError bad(const std::string& what) { return RequestError(400, what); }

long long as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw bad("\"" + field + "\" must be an integer");
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > 1'000'000) throw bad("\"" + field + "\" is out of range");
    return static_cast<long long>(u);
  }
  const auto s = v.get<std::int64_t>();
  if (s < -1'000'000 || s > 1'000'000) throw bad("\"" + field + "\" is out of range");
  return s;
}

const json& field(const json& obj, const std::string& name) {
  const auto it = obj.find(name);
  if (it == obj.end()) throw bad("missing field \"" + name + "\"");
  return *it;
}

std::vector<int> card_list(const json& obj, const std::string& name) {
  const json& arr = field(obj, name);
  if (!arr.is_array()) throw bad("\"" + name + "\" must be an array");
  if (arr.size() > static_cast<std::size_t>(kMaxCards)) {
    throw bad("\"" + name + "\" holds more than " + std::to_string(kMaxCards) + " cards");
  }
  std::vector<int> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(static_cast<int>(as_int(v, name + "[]")));
  return out;
}

int card_count(const json& obj) {
  const auto n = as_int(field(obj, "n"), "n");
  if (n < 0 || n > kMaxCards) {
    throw bad("\"n\" must lie in 0.." + std::to_string(kMaxCards));
  }
  return static_cast<int>(n);
}

int pile_next(const json& obj) {
  return static_cast<int>(as_int(field(obj, "pile_next"), "pile_next"));
}

const json& state_field(const json& req) {
  const auto it = req.find("state");
  return it == req.end() ? req : *it;
}

json moves_json(const std::vector<DekMove>& moves) {
  json arr = json::array();
  for (DekMove m : moves) arr.push_back(to_json(m));
  return arr;
}

Response game_new(const json& req) {
  const json& shuffle = field(req, "shuffle");
  if (!shuffle.is_array()) throw bad("\"shuffle\" must be an array");
  if (shuffle.size() > static_cast<std::size_t>(kMaxCards)) {
    throw bad("\"shuffle\" holds more than " + std::to_string(kMaxCards) + " cards");
  }
  std::vector<long long> values;
  for (const auto& v : shuffle) values.push_back(as_int(v, "shuffle[]"));
  const auto state = new_game(validate_permutation(values));

  std::string variant = "full";
  if (const auto it = req.find("variant"); it != req.end()) {
    if (!it->is_string()) throw bad("\"variant\" must be \"full\" or \"visible\"");
    variant = it->get<std::string>();
  }
  if (variant == "full") return {200, to_json(state)};
  if (variant == "visible") return {200, to_json(visible(state))};
  throw bad("\"variant\" must be \"full\" or \"visible\"");
}

Response game_moves(const json& req) {
  const auto state = state_from_json(state_field(req));
  return std::visit(
      [](const auto& s) -> Response {
        if (s.next_needed == s.n + 1) throw RequestError(409, "the game is already won");
        return {200, moves_json(legal_moves(s))};
      },
      state);
}

Response game_apply(const json& req) {
  const auto state = state_from_json(field(req, "state"));
  const auto* full = std::get_if<DekState>(&state);
  if (!full) throw bad("apply needs the full state (with \"deck\")");
  const DekMove m = move_from_json(field(req, "move"));
  return {200, to_json(apply_move(*full, m))};
}

Response game_hint(const json& req) {
  const auto state = state_from_json(field(req, "state"));
  const json& mode_json = field(req, "mode");
  if (!mode_json.is_string()) throw bad("\"mode\" must be \"clairvoyant\" or \"policy\"");
  const auto mode = mode_json.get<std::string>();

  Hint h{DekMove::play_deck, WinValue::zero()};
  if (mode == "clairvoyant") {
    const auto* full = std::get_if<DekState>(&state);
    if (!full) throw bad("clairvoyant hints need the full state (with \"deck\")");
    if (full->n > kMaxClairvoyantHintCards) {
      throw RequestError(422, "clairvoyant hints support n <= " +
                                  std::to_string(kMaxClairvoyantHintCards));
    }
    h = hint(*full, HintMode::clairvoyant);
  } else if (mode == "policy") {
    const DekView view = std::holds_alternative<DekState>(state)
                             ? visible(std::get<DekState>(state))
                             : std::get<DekView>(state);
    if (view.n > kMaxPolicyHintCards) {
      throw RequestError(422, "policy hints support n <= " +
                                  std::to_string(kMaxPolicyHintCards));
    }
    h = hint(view);
  } else {
    throw bad("\"mode\" must be \"clairvoyant\" or \"policy\"");
  }
  json out = to_json(h.move);
  out["value"] = to_json(h.value);
  return {200, out};
}

Response error(int status, const std::string& what) {
  return {status, json{{"error", what}}};
}

}  // namespace

json to_json(const DekState& s) {
  return json{{"deck", s.deck}, {"deque", s.deque}, {"pile_next", s.next_needed}, {"n", s.n}};
}

json to_json(const DekView& v) {
  return json{{"deck_count", v.deck_size},
              {"top", v.top ? json(*v.top) : json(nullptr)},
              {"deque", v.deque},
              {"pile_next", v.next_needed},
              {"n", v.n}};
}

json to_json(DekMove m) { return json{{"move", std::string(to_string(m))}}; }

json to_json(const WinValue& v) {
  return json{{"num", v.num().str()}, {"den", v.den().str()}};
}

std::variant<DekState, DekView> state_from_json(const json& j) {
  if (!j.is_object()) throw bad("state must be a JSON object");
  if (j.contains("deck")) {
    DekState s{card_list(j, "deck"), card_list(j, "deque"), pile_next(j), card_count(j)};
    s.validate();
    return s;
  }
  if (j.contains("deck_count")) {
    DekView v;
    v.deque = card_list(j, "deque");
    v.next_needed = pile_next(j);
    v.n = card_count(j);
    const auto count = as_int(j["deck_count"], "deck_count");
    if (count < 0 || count > kMaxCards) throw bad("\"deck_count\" is out of range");
    v.deck_size = static_cast<int>(count);
    if (const auto it = j.find("top"); it != j.end() && !it->is_null()) {
      v.top = static_cast<int>(as_int(*it, "top"));
    }
    v.validate();
    return v;
  }
  throw bad("state needs \"deck\" (full variant) or \"deck_count\" (visible variant)");
}

DekMove move_from_json(const json& j) {
  const json* name = &j;
  if (j.is_object()) name = &field(j, "move");
  if (!name->is_string()) throw bad("move must be a move name or {\"move\": name}");
  const auto m = parse_dek_move(name->get<std::string>());
  if (!m) throw bad("unknown move \"" + name->get<std::string>() + "\"");
  return *m;
}

Response handle(std::string_view method, std::string_view path, std::string_view body) {
  try {
    if (path == "/health") {
      if (method != "GET") return error(405, "use GET /health");
      return {200, json{{"ok", true}}};
    }
    Response (*route)(const json&) = nullptr;
    if (path == "/game/new") route = game_new;
    if (path == "/game/moves") route = game_moves;
    if (path == "/game/apply") route = game_apply;
    if (path == "/game/hint") route = game_hint;
    if (!route) return error(404, "no such endpoint");
    if (method != "POST") return error(405, "use POST");

    const json req = json::parse(body, nullptr, false);
    if (req.is_discarded()) return error(400, "malformed JSON");
    if (!req.is_object()) return error(400, "request body must be a JSON object");
    return route(req);
  } catch (const RequestError& e) {
    return error(e.status(), e.what());
  } catch (const GameOverError& e) {
    return error(409, e.what());
  } catch (const std::exception& e) {
    // DekError, PermutationError and json type errors all land here.
    return error(400, e.what());
  }
}

struct HttpService::Impl {
  httplib::Server server;
  std::atomic<bool> bound{false};
};

HttpService::HttpService() : impl_(std::make_unique<Impl>()) {
  auto route = [](const httplib::Request& req, httplib::Response& res) {
    const auto out = handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
    detail::logger()->debug("{} {} -> {}", req.method, req.path, out.status);
  };
  auto& s = impl_->server;
  s.Get(".*", route);
  s.Post(".*", route);
  s.Put(".*", route);
  s.Delete(".*", route);
  s.Patch(".*", route);
  s.set_payload_max_length(1 << 20);
  s.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                             std::exception_ptr) {
    res.status = 400;
    res.set_content(R"({"error":"bad request"})", "application/json");
  });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
  int bound = -1;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (impl_->server.bind_to_port(host, port)) {
    bound = port;
  }
  impl_->bound = bound > 0;
  return bound;
}

bool HttpService::run() {
  if (!impl_->bound) return false;
  return impl_->server.listen_after_bind();
}

void HttpService::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool HttpService::running() const { return impl_->server.is_running(); }

bool serve_http(int port, const std::string& bind) {
  HttpService service;
  const int bound = service.bind(bind, port);
  if (bound < 0) {
    detail::logger()->error("could not bind {}:{}", bind, port);
    return false;
  }
  detail::logger()->info("serving DEK on http://{}:{}", bind, bound);
  return service.run();
}

}  // namespace permdek::service
