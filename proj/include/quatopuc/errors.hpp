#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quatopuc {

enum class Errc {
    NotInImage,
    NoConvergence,
    SingularConstantTerm,
    ShiftResidual,
    NotContraction,
    ConstantMismatch,
    NotChiImage,
    HorizonExceeded,
    NotPositiveDefinite,
    DegreeTooSmall,
    RouteMismatch,
    NotMonic,
    OnBoundary,
    NotPositiveOnGrid,
    InvalidInput,
};

std::string_view errc_name(Errc e) noexcept;

// Every library failure is thrown as this type. `index` carries the order or
// step at which the failure was detected when that is meaningful.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::optional<int> index = std::nullopt)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), index_(index) {}

    Errc code() const noexcept { return code_; }
    std::optional<int> index() const noexcept { return index_; }

private:
    Errc code_;
    std::optional<int> index_;
};

} // namespace quatopuc
