#pragma once

#include <stdexcept>
#include <string>

namespace polyplace {

// Every failure raised by the library carries a stable, machine-readable
// kind (e.g. "NonRectilinear", "MalformedTrace") next to the message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    [[nodiscard]] const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

}  // namespace polyplace
