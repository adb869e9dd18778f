#ifndef COXSPLIT_CAPS_HPP
#define COXSPLIT_CAPS_HPP

#include <cstddef>
#include <string>

namespace coxsplit {

/// Resource bounds. Exceeding any of them raises ResourceBoundError rather
/// than returning a wrong or partial answer.
struct Caps {
    int generator_cap = 16;          ///< subset-enumeration cap (separators, K(W,S), splits)
    std::size_t closure_cap = 200000;  ///< braid-closure / ball-enumeration size cap
    int word_cap = 64;               ///< maximum input word length
    std::size_t order_cap = 1024;    ///< finite special subgroup order cap
    std::size_t memo_cap = 1000000;  ///< LRU entries for reduced-word memoization

    /// Parses "generators=16,closure=200000,order=1024,word=64,memo=1000000".
    /// Unknown keys or non-positive values are rejected.
    static Caps parse(const std::string& text);
    static Caps parse(const std::string& text, Caps base);
};

}  // namespace coxsplit

#endif
