#include "qgain/format.hpp"

#include <charconv>
#include <cmath>

#include "qgain/quaternion.hpp"

namespace qgain {

std::string format_real(double value, int significant) {
    // std::to_chars never consults the locale.
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general,
                             significant);
    return std::string(buf, res.ptr);
}

std::string to_string(const Quaternion& q) {
    auto part = [](double v, const char* unit, bool first) {
        std::string s;
        if (!first && v >= 0.0) {
            s += '+';
        }
        s += format_real(v);
        s += unit;
        return s;
    };
    std::string out = part(q.w, "", true);
    out += part(q.x, "i", false);
    out += part(q.y, "j", false);
    out += part(q.z, "k", false);
    return out;
}

} // namespace qgain
