#pragma once

#include <string>

namespace ionbounds {

/// Full-precision decimal rendering (17 significant digits) so CSV output is
/// reproducible bit for bit. NaN renders as "nan".
std::string format_full_precision(double x);

}  // namespace ionbounds
