#include "pirick/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "pirick/error.hpp"

namespace pirick {

void Caps::apply_overrides(std::string_view overrides) {
    while (!overrides.empty()) {
        auto comma = overrides.find(',');
        auto item = overrides.substr(0, comma);
        overrides = comma == std::string_view::npos ? std::string_view{} : overrides.substr(comma + 1);
        if (item.empty()) continue;

        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::Syntax, "cap override needs key=value: " + std::string(item));
        auto key = item.substr(0, eq);
        auto text = item.substr(eq + 1);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
            throw Error(ErrorKind::Syntax, "bad cap value: " + std::string(item));

        if (key == "ring") ring = value;
        else if (key == "cubic") cubic = value;
        else if (key == "lattice") lattice = value;
        else if (key == "hom") hom = value;
        else throw Error(ErrorKind::Syntax, "unknown cap key: " + std::string(key));
    }
}

Caps Caps::from_environment() {
    Caps caps;
    if (const char* env = std::getenv("PIRICK_CAPS")) caps.apply_overrides(env);
    return caps;
}

}  // namespace pirick
