#pragma once

#include <string>

namespace qgain {

/// Locale-independent decimal string with `significant` significant digits.
/// Used for all numeric CLI and report output.
std::string format_real(double value, int significant = 12);

} // namespace qgain
