#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "garside/braid.hpp"
#include "garside/invariant_sets.hpp"

namespace garside {

/// Round curve enclosing the punctures lo..hi; its diameter is hi - lo.
struct StandardCurve {
  int lo;
  int hi;

  int diameter() const { return hi - lo; }
  friend auto operator<=>(const StandardCurve&, const StandardCurve&) = default;
};

/// 1 <= lo < hi <= n and diameter at most n-2.
bool is_valid_curve(const StandardCurve& c, int n);

std::vector<StandardCurve> all_standard_curves(int n);

/// Image under the half twist.
StandardCurve mirror(const StandardCurve& c, int n);

/// Image of a standard curve under a permutation braid, when it is again
/// standard (the image puncture set is an interval).
std::optional<StandardCurve> curve_image_simple(const SimpleBraid& s, const StandardCurve& c);

/// max - min of the image puncture set.
int image_span(const SimpleBraid& s, const StandardCurve& c);

/// Tracks c through the Delta power and then each canonical factor, failing
/// as soon as an intermediate image is not standard.
std::optional<StandardCurve> curve_image(const Braid& x, const StandardCurve& c);

struct PeriodicCurve {
  StandardCurve curve;
  std::vector<StandardCurve> orbit;  // starts at curve
  bool compatible;                   // orbit curves pairwise disjoint or nested
};

/// Every periodic curve of the partial map curve_image(x, .), sorted by curve.
/// An empty result means x has no standard reduction system.
std::vector<PeriodicCurve> find_standard_reduction(const Braid& x,
                                                   Execution exec = Execution::kSerial);

}  // namespace garside
