#include "quatopuc/errors.hpp"

namespace quatopuc {

std::string_view errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::NotInImage: return "NotInImage";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::SingularConstantTerm: return "SingularConstantTerm";
    case Errc::ShiftResidual: return "ShiftResidual";
    case Errc::NotContraction: return "NotContraction";
    case Errc::ConstantMismatch: return "ConstantMismatch";
    case Errc::NotChiImage: return "NotChiImage";
    case Errc::HorizonExceeded: return "HorizonExceeded";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::RouteMismatch: return "RouteMismatch";
    case Errc::NotMonic: return "NotMonic";
    case Errc::OnBoundary: return "OnBoundary";
    case Errc::NotPositiveOnGrid: return "NotPositiveOnGrid";
    case Errc::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

} // namespace quatopuc
