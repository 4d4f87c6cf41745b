#include "hnslope/series.hpp"

namespace hnslope {

HahnRing make_hahn_ring(FieldPtr field, const Rational& default_precision) {
  if (default_precision.sign() <= 0) fail(ErrorKind::InvalidArgument, "precision must be positive");
  return std::make_shared<const HahnContext>(HahnContext{std::move(field), default_precision});
}

XiRing make_xi_ring(const Rational& default_precision) {
  if (default_precision.sign() <= 0) fail(ErrorKind::InvalidArgument, "precision must be positive");
  return std::make_shared<const XiContext>(XiContext{default_precision});
}

}  // namespace hnslope
