#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

namespace cclique {

/// Scalar payload of one matrix entry; fits a single simulated message word.
using Value = std::int64_t;

/// +inf of the min-plus semiring. Also the saturation ceiling for counting.
inline constexpr Value kInfinity = std::numeric_limits<Value>::max();

/// A semiring together with the single element that is never communicated.
///
/// The engine relies on two facts only: add(x, omitted) == x, and
/// mul(x, omitted) == mul(omitted, x) == omitted. Any instance satisfying
/// these may be plugged in.
struct Semiring {
  std::string_view name;
  Value omitted = 0;
  Value add_identity = 0;
  Value one = 1;
  Value (*add)(Value, Value) = nullptr;
  Value (*mul)(Value, Value) = nullptr;

  bool is_omitted(Value v) const { return v == omitted; }

  friend bool operator==(const Semiring& x, const Semiring& y) {
    return x.name == y.name && x.omitted == y.omitted && x.add == y.add && x.mul == y.mul;
  }
};

/// (OR, AND) over {0, 1}; omitted = false.
Semiring boolean_semiring();
/// (+, x) over saturating 64-bit integers; omitted = 0.
Semiring counting_semiring();
/// (min, +) over 64-bit integers with +inf = kInfinity; omitted = +inf.
Semiring min_plus_semiring();

/// "bool", "count" or "minplus".
std::optional<Semiring> semiring_by_name(std::string_view name);

}  // namespace cclique
