#include "stretchfpp/format.hpp"

#include <charconv>
#include <system_error>

namespace sfpp {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 15);
    if (res.ec != std::errc()) return "nan";
    return std::string(buf, res.ptr);
}

}  // namespace sfpp
