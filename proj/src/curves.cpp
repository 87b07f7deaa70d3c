#include "garside/curves.hpp"

#include <algorithm>
#include <stdexcept>

#include "garside/parallel.hpp"

namespace garside {

bool is_valid_curve(const StandardCurve& c, int n) {
  return 1 <= c.lo && c.lo < c.hi && c.hi <= n && c.diameter() <= n - 2;
}

std::vector<StandardCurve> all_standard_curves(int n) {
  std::vector<StandardCurve> out;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi)
      if (hi - lo <= n - 2) out.push_back({lo, hi});
  return out;
}

StandardCurve mirror(const StandardCurve& c, int n) { return {n + 1 - c.hi, n + 1 - c.lo}; }

namespace {

void require_valid(const StandardCurve& c, int n) {
  if (!is_valid_curve(c, n)) throw std::invalid_argument("curve is not a standard curve here");
}

std::pair<int, int> image_bounds(const SimpleBraid& s, const StandardCurve& c) {
  int lo = s.strands() + 1, hi = 0;
  for (int i = c.lo; i <= c.hi; ++i) {
    lo = std::min(lo, s.image(i));
    hi = std::max(hi, s.image(i));
  }
  return {lo, hi};
}

}  // namespace

int image_span(const SimpleBraid& s, const StandardCurve& c) {
  require_valid(c, s.strands());
  const auto [lo, hi] = image_bounds(s, c);
  return hi - lo;
}

std::optional<StandardCurve> curve_image_simple(const SimpleBraid& s, const StandardCurve& c) {
  require_valid(c, s.strands());
  const auto [lo, hi] = image_bounds(s, c);
  // Distinct images, so an interval exactly when the span equals the diameter.
  if (hi - lo != c.diameter()) return std::nullopt;
  return StandardCurve{lo, hi};
}

std::optional<StandardCurve> curve_image(const Braid& x, const StandardCurve& c) {
  const int n = x.strands();
  require_valid(c, n);
  StandardCurve cur = x.inf() % 2 != 0 ? mirror(c, n) : c;
  for (const auto& f : x.factors()) {
    auto next = curve_image_simple(f, cur);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

std::vector<PeriodicCurve> find_standard_reduction(const Braid& x, Execution exec) {
  const int n = x.strands();
  const auto curves = all_standard_curves(n);
  std::vector<std::optional<StandardCurve>> image(curves.size());
  parallel_for(curves.size(), exec == Execution::kParallel,
               [&](std::size_t i) { image[i] = curve_image(x, curves[i]); });
  auto index_of = [&](const StandardCurve& c) {
    return static_cast<std::size_t>(
        std::lower_bound(curves.begin(), curves.end(), c) - curves.begin());
  };

  std::vector<PeriodicCurve> out;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    std::vector<StandardCurve> orbit{curves[i]};
    std::size_t cur = i;
    bool periodic = false;
    for (std::size_t step = 0; step < curves.size(); ++step) {
      if (!image[cur]) break;
      const std::size_t next = index_of(*image[cur]);
      if (next == i) {
        periodic = true;
        break;
      }
      orbit.push_back(curves[next]);
      cur = next;
    }
    if (!periodic) continue;
    bool compatible = true;
    for (std::size_t a = 0; a < orbit.size() && compatible; ++a) {
      for (std::size_t b = a + 1; b < orbit.size(); ++b) {
        const auto& u = orbit[a];
        const auto& v = orbit[b];
        const bool disjoint = u.hi < v.lo || v.hi < u.lo;
        const bool nested = (u.lo <= v.lo && v.hi <= u.hi) || (v.lo <= u.lo && u.hi <= v.hi);
        if (!disjoint && !nested) {
          compatible = false;
          break;
        }
      }
    }
    out.push_back({curves[i], std::move(orbit), compatible});
  }
  return out;
}

}  // namespace garside
