#pragma once

namespace plwe {

inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace plwe
