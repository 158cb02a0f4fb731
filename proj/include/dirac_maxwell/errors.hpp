#pragma once

#include <stdexcept>
#include <string>

namespace dm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DM_DECLARE_ERROR(Name)              \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

DM_DECLARE_ERROR(DomainError);
DM_DECLARE_ERROR(NonClosure);
DM_DECLARE_ERROR(NotUnitary);
DM_DECLARE_ERROR(LayoutViolation);
DM_DECLARE_ERROR(GridTooCoarse);
DM_DECLARE_ERROR(QuadratureNotConverged);
DM_DECLARE_ERROR(AxisMismatch);

#undef DM_DECLARE_ERROR

}  // namespace dm
