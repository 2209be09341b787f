#pragma once

// Stateless JSON service for DEK play. Every request carries the full game
// state; handlers revalidate it and never keep anything between requests.
//
//   POST /game/new    {"shuffle":[...], "variant":"full"|"visible"} -> state
//   POST /game/moves  {"state":S}                       -> [{"move":M}, ...]
//   POST /game/apply  {"state":S, "move":M}             -> state
//   POST /game/hint   {"state":S, "mode":"clairvoyant"|"policy"}
//                                                       -> {"move":M, "value":{"num","den"}}
//   GET  /health                                        -> {"ok":true}
//
// Full state:    {"deck":[...], "deque":[...], "pile_next":k, "n":n}
// Visible state: {"deck_count":d, "top":c|null, "deque":[...], "pile_next":k, "n":n}
// `top` is the card just drawn from the deck.

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "permdek/dek.hpp"

namespace permdek::service {

using json = nlohmann::json;

inline constexpr int kMaxCards = 52;
inline constexpr int kMaxClairvoyantHintCards = 16;
inline constexpr int kMaxPolicyHintCards = 9;

struct Response {
  int status = 200;
  json body;
};

/// A request the service refuses; `status` is the 4xx code to send.
class RequestError : public std::runtime_error {
 public:
  RequestError(int status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

json to_json(const DekState& s);
json to_json(const DekView& v);
json to_json(DekMove m);
json to_json(const WinValue& v);

/// Either encoding; which one is decided by the presence of "deck".
std::variant<DekState, DekView> state_from_json(const json& j);
DekMove move_from_json(const json& j);

/// Routes one request. Never throws; every failure becomes a 4xx body
/// {"error": "..."}.
Response handle(std::string_view method, std::string_view path, std::string_view body);

/// HTTP front end over handle(). Requests are served concurrently.
class HttpService {
 public:
  HttpService();
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds `host:port`; port 0 picks a free one. Returns the bound port,
  /// or -1 on failure.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop().
  bool run();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// bind + run; returns false if the address could not be bound.
bool serve_http(int port, const std::string& bind);

}  // namespace permdek::service
