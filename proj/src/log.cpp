#include "log.hpp"

#include <cstdlib>
#include <mutex>

#include <spdlog/sinks/stdout_color_sinks.h>

namespace permdek::detail {

std::shared_ptr<spdlog::logger> logger() {
  static std::once_flag once;
  static std::shared_ptr<spdlog::logger> instance;
  std::call_once(once, [] {
    instance = spdlog::get("permdek");
    if (!instance) instance = spdlog::stderr_color_mt("permdek");
    auto level = spdlog::level::warn;
    if (const char* env = std::getenv("PERMDEK_LOG")) level = spdlog::level::from_str(env);
    instance->set_level(level);
  });
  return instance;
}

}  // namespace permdek::detail
