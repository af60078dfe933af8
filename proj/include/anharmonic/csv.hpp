#pragma once

#include <string>

namespace anharmonic {

// 17 significant digits (lossless round trip); "nan" for NaN.
std::string format_real(double value);

} // namespace anharmonic
