#pragma once

#include <stdexcept>
#include <string>

namespace ckdv {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define CKDV_DEFINE_ERROR(Name)                                   \
    struct Name : Error {                                         \
        explicit Name(const std::string& msg) : Error(msg) {}     \
    }

CKDV_DEFINE_ERROR(ComplexEigenvalues);
CKDV_DEFINE_ERROR(ZeroEigenvalue);
CKDV_DEFINE_ERROR(NonDiagonalizable);
CKDV_DEFINE_ERROR(InvalidParameter);
CKDV_DEFINE_ERROR(OutOfDomain);
CKDV_DEFINE_ERROR(NonIntegrable);
CKDV_DEFINE_ERROR(UnknownCase);
CKDV_DEFINE_ERROR(ContainmentViolated);
CKDV_DEFINE_ERROR(GridMismatch);
CKDV_DEFINE_ERROR(Blowup);
CKDV_DEFINE_ERROR(KindMismatch);
CKDV_DEFINE_ERROR(ZeroDenominator);
CKDV_DEFINE_ERROR(IoError);

#undef CKDV_DEFINE_ERROR

} // namespace ckdv
