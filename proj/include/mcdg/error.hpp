#pragma once

#include <stdexcept>
#include <string>

namespace mcdg {

/// Raised for every validation, precondition, or parse failure.
/// The message always names the first violated condition and, where it
/// exists, a witnessing basis tuple or input position.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw error(msg); }

inline void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

} // namespace mcdg
