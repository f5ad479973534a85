#pragma once

namespace cliquecomm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cliquecomm
