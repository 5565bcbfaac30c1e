#pragma once

#include <string>
#include <utility>

#include "mcdg/error.hpp"

namespace mcdg_tests {

/// Runs f and returns the mcdg::error message it throws, or "" when it
/// returns normally.
template <typename F>
std::string thrown_message(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const mcdg::error& e) {
        return e.what();
    }
    return "";
}

} // namespace mcdg_tests
