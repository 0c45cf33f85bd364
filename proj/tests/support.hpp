#pragma once

#include "lwd/error.hpp"
#include "lwd/word.hpp"

#include <initializer_list>
#include <optional>
#include <utility>

namespace lwd::test {

inline constexpr Letter V = kVariable;

inline Word w2(std::initializer_list<std::pair<Position, Letter>> es) {
    std::vector<Entry> v;
    for (auto [p, l] : es) v.push_back({p, l});
    return Word(WordKind::two_sided, v);
}

inline Word w1(std::initializer_list<std::pair<Position, Letter>> es) {
    std::vector<Entry> v;
    for (auto [p, l] : es) v.push_back({p, l});
    return Word(WordKind::one_sided, v);
}

// Code of the Error thrown by f, if any.
template <class F>
std::optional<Errc> error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace lwd::test
