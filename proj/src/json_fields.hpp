// Copyright 2026 The qwalk Authors
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

#pragma once

// Helpers for reading config objects with error messages that name the field.

#include <string>
#include <string_view>

#include "json.hpp"
#include "qwalk/errors.hpp"

namespace qwalk::detail {

inline const nlohmann::json& require_field(const nlohmann::json& j, std::string_view name) {
  if (!j.is_object()) throw ConfigError("expected a JSON object");
  auto it = j.find(std::string(name));
  if (it == j.end()) throw ConfigError(std::string(name) + ": missing required field");
  return *it;
}

template <typename T>
T field_as(const nlohmann::json& value, std::string_view name) {
  try {
    if constexpr (std::is_same_v<T, bool>) {
      if (!value.is_boolean()) throw ConfigError(std::string(name) + ": expected boolean");
    } else if constexpr (std::is_integral_v<T>) {
      if (!value.is_number_integer()) throw ConfigError(std::string(name) + ": expected integer");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!value.is_number()) throw ConfigError(std::string(name) + ": expected number");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!value.is_string()) throw ConfigError(std::string(name) + ": expected string");
    }
    return value.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string(name) + ": " + e.what());
  }
}

template <typename T>
T required(const nlohmann::json& j, std::string_view name) {
  return field_as<T>(require_field(j, name), name);
}

template <typename T>
T optional(const nlohmann::json& j, std::string_view name, T fallback) {
  if (!j.is_object()) throw ConfigError("expected a JSON object");
  auto it = j.find(std::string(name));
  if (it == j.end() || it->is_null()) return fallback;
  return field_as<T>(*it, name);
}

// Re-throws a nested ConfigError with `prefix.` prepended to its message.
template <typename F>
auto with_context(std::string_view prefix, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const BiasedGroverRangeError& e) {
    throw BiasedGroverRangeError(std::string(prefix) + "." + e.what());
  } catch (const CoinDomainError& e) {
    throw CoinDomainError(std::string(prefix) + "." + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(prefix) + "." + e.what());
  }
}

}  // namespace qwalk::detail
