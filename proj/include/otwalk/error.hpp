#pragma once

#include <stdexcept>
#include <string>

namespace otwalk {

// All recoverable library failures carry a stable machine-readable kind
// ("degenerate-triangle", "perturbation-failure", ...) next to the message.
class Failure : public std::runtime_error {
public:
    Failure(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

}  // namespace otwalk
