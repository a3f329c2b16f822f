#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covermeasure/measure/functional.hpp"

namespace covermeasure {

/// Shortest cycle; exactly the minimum over simple cycles of their lengths.
Functional systole_functional();
/// 1 on graph types with a separating edge, 0 otherwise.
Functional bridge_functional();
/// Shortest edge.
Functional minedge_functional();

/// "systole", "bridge", "minedge". Throws Error(InvalidArgument) otherwise.
Functional functional_by_name(std::string_view name);
std::vector<std::string> functional_names();

}  // namespace covermeasure
