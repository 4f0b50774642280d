#pragma once

#include <string>

namespace sympsum {

/// Shortest decimal that round-trips to the same double ("1.5", "2", "0.1").
std::string format_shortest(double v);

/// Fixed 17-significant-digit form used by machine-readable reports.
std::string format_sig17(double v);

}  // namespace sympsum
