#pragma once

#include <string_view>

namespace kn3::fixtures_data {

extern const std::string_view orientable_4;
extern const std::string_view strong_6;
extern const std::string_view nonorientable_6;
extern const std::string_view multi_nonorientable_4;

}  // namespace kn3::fixtures_data
