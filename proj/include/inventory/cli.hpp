#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "inventory/multiset.hpp"

namespace inventory {

// Exit codes: 0 success, 1 falsification or bad input, 2 budget exhausted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "4{4,9,10}" or "3{3}+2{5,6,7}": copies{values} terms joined by '+'.
Multiset parse_repeat(std::string_view text);

}  // namespace inventory
