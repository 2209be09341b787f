#pragma once

#include <memory>

#include <spdlog/spdlog.h>

namespace permdek::detail {

/// The "permdek" stderr logger. Level comes from PERMDEK_LOG, default warn.
std::shared_ptr<spdlog::logger> logger();

}  // namespace permdek::detail
