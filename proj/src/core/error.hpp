#pragma once

#include <stdexcept>
#include <string>

namespace dominion {

enum class Errc {
    invalid_argument,
    parse,
    capacity,
    overflow,
    not_dominating,
    hypothesis,
    timeout,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace dominion
