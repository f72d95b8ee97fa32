#pragma once

namespace trihom {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace trihom
