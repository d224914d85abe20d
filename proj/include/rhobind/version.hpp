#pragma once

namespace rhobind {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace rhobind
