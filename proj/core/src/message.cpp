#include "riot/message.hpp"

#include <charconv>

namespace riot {

std::string canonicalForm(const Scalar& v) {
    if (const std::string* s = std::get_if<std::string>(&v)) return *s;
    double d = std::get<double>(v);
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d);
    return std::string(buf, ptr);
}

}  // namespace riot
