#include "cclique/semiring.hpp"

namespace cclique {
namespace {

constexpr Value kNegSaturation = std::numeric_limits<Value>::min();

Value bool_add(Value x, Value y) { return (x != 0 || y != 0) ? 1 : 0; }
Value bool_mul(Value x, Value y) { return (x != 0 && y != 0) ? 1 : 0; }

Value saturating_add(Value x, Value y) {
  Value r;
  if (__builtin_add_overflow(x, y, &r)) return x > 0 ? kInfinity : kNegSaturation;
  return r;
}

Value saturating_mul(Value x, Value y) {
  Value r;
  if (__builtin_mul_overflow(x, y, &r)) return ((x > 0) == (y > 0)) ? kInfinity : kNegSaturation;
  return r;
}

Value tropical_add(Value x, Value y) { return x < y ? x : y; }

Value tropical_mul(Value x, Value y) {
  if (x == kInfinity || y == kInfinity) return kInfinity;
  Value r;
  if (__builtin_add_overflow(x, y, &r)) return x > 0 ? kInfinity : kNegSaturation;
  return r;
}

}  // namespace

Semiring boolean_semiring() {
  return Semiring{"bool", 0, 0, 1, &bool_add, &bool_mul};
}

Semiring counting_semiring() {
  return Semiring{"count", 0, 0, 1, &saturating_add, &saturating_mul};
}

Semiring min_plus_semiring() {
  return Semiring{"minplus", kInfinity, kInfinity, 0, &tropical_add, &tropical_mul};
}

std::optional<Semiring> semiring_by_name(std::string_view name) {
  if (name == "bool") return boolean_semiring();
  if (name == "count") return counting_semiring();
  if (name == "minplus") return min_plus_semiring();
  return std::nullopt;
}

}  // namespace cclique
