#include "coxsplit/caps.hpp"

#include <charconv>

#include "coxsplit/errors.hpp"

namespace coxsplit {

Caps Caps::parse(const std::string& text) { return parse(text, Caps{}); }

Caps Caps::parse(const std::string& text, Caps base) {
    Caps out = base;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string_view item(text.data() + pos, end - pos);
        pos = end + 1;
        if (item.empty()) continue;

        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw InputError("caps entry needs key=value: " + std::string(item));
        std::string_view key = item.substr(0, eq);
        std::string_view val = item.substr(eq + 1);
        long long num = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), num);
        if (ec != std::errc{} || ptr != val.data() + val.size() || num <= 0)
            throw InputError("caps value must be a positive integer: " + std::string(item));

        if (key == "generators")
            out.generator_cap = static_cast<int>(num);
        else if (key == "closure")
            out.closure_cap = static_cast<std::size_t>(num);
        else if (key == "word")
            out.word_cap = static_cast<int>(num);
        else if (key == "order")
            out.order_cap = static_cast<std::size_t>(num);
        else if (key == "memo")
            out.memo_cap = static_cast<std::size_t>(num);
        else
            throw InputError("unknown caps key: " + std::string(key));
    }
    return out;
}

}  // namespace coxsplit
