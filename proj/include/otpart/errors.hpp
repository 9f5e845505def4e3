#pragma once

#include <stdexcept>
#include <string>

namespace otpart {

// Base for every error thrown by the library. The CLI maps these to
// one-line machine-readable messages keyed by name().
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define OTPART_ERROR(NAME)                          \
  class NAME : public Error {                       \
   public:                                          \
    explicit NAME(const std::string& what)          \
        : Error(#NAME, what) {}                     \
  }

OTPART_ERROR(InvalidArgument);
OTPART_ERROR(EmptyGraph);
OTPART_ERROR(DisconnectedGraph);
OTPART_ERROR(DegenerateMatrix);
OTPART_ERROR(ShapeMismatch);
OTPART_ERROR(DimensionMismatch);
OTPART_ERROR(EmptyCurve);
OTPART_ERROR(GridMismatch);
OTPART_ERROR(BundleMismatch);
OTPART_ERROR(EmptySet);
OTPART_ERROR(KTooLarge);
OTPART_ERROR(InvalidCenters);
OTPART_ERROR(BadDelta);
OTPART_ERROR(DisconnectedTarget);
OTPART_ERROR(InfeasibleInit);
OTPART_ERROR(MissingTrace);
OTPART_ERROR(SizeMismatch);
OTPART_ERROR(BadLevel);
OTPART_ERROR(DisconnectedSample);
OTPART_ERROR(ConfigError);
OTPART_ERROR(IoError);
OTPART_ERROR(AttributesRequired);

#undef OTPART_ERROR

}  // namespace otpart
