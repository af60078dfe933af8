#include "anharmonic/csv.hpp"

#include <cmath>
#include <cstdio>

namespace anharmonic {

std::string format_real(double value)
{
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value == 0.0 ? 0.0 : value);
    return buf;
}

} // namespace anharmonic
