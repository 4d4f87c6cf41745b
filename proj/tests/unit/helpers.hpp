#pragma once

#include <string>

#include "doctest.h"
#include "hnslope/error.hpp"
#include "hnslope/polygon.hpp"

namespace testing {

inline hnslope::SlopeVector sv(const std::string& s) { return hnslope::SlopeVector::parse(s); }

template <class F>
hnslope::ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const hnslope::Error& e) {
    return e.kind();
  }
  FAIL("expected an hnslope::Error");
  return hnslope::ErrorKind::InvalidArgument;
}

}  // namespace testing
