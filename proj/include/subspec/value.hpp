#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace subspec {

/// The two-type universe shared by contract predicates and mini-language
/// programs. All integral surface types collapse to one 64-bit signed int.
enum class Type { Int, Bool };

inline const char* to_string(Type t) { return t == Type::Int ? "int" : "bool"; }

class Value {
 public:
  Value() : v_(std::int64_t{0}) {}

  static Value of_int(std::int64_t v) { return Value(v); }
  static Value of_bool(bool v) { return Value(v); }

  Type type() const {
    return std::holds_alternative<std::int64_t>(v_) ? Type::Int : Type::Bool;
  }
  bool is_int() const { return type() == Type::Int; }
  bool is_bool() const { return type() == Type::Bool; }

  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }

  std::string to_string() const {
    if (is_int()) return std::to_string(as_int());
    return as_bool() ? "true" : "false";
  }

  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  // Ordering used only to fix deterministic output orders (args tuples are
  // compared positionally and positions never mix types in practice).
  friend bool operator<(const Value& a, const Value& b) {
    if (a.is_int() != b.is_int()) return a.is_int();
    if (a.is_int()) return a.as_int() < b.as_int();
    return !a.as_bool() && b.as_bool();
  }

 private:
  explicit Value(std::int64_t v) : v_(v) {}
  explicit Value(bool v) : v_(v) {}

  std::variant<std::int64_t, bool> v_;
};

/// Faults that 64-bit checked arithmetic can raise. Arithmetic never wraps:
/// a result outside the 64-bit range is reported, not truncated.
enum class ArithFault { overflow, div_by_zero, negative_exponent };

inline const char* to_string(ArithFault f) {
  switch (f) {
    case ArithFault::overflow: return "overflow";
    case ArithFault::div_by_zero: return "div_by_zero";
    case ArithFault::negative_exponent: return "negative_exponent";
  }
  return "?";
}

using Checked = std::variant<std::int64_t, ArithFault>;

inline Checked checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) return ArithFault::overflow;
  return r;
}

inline Checked checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) return ArithFault::overflow;
  return r;
}

inline Checked checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return ArithFault::overflow;
  return r;
}

inline Checked checked_div(std::int64_t a, std::int64_t b) {
  if (b == 0) return ArithFault::div_by_zero;
  if (a == INT64_MIN && b == -1) return ArithFault::overflow;
  return a / b;  // truncates toward zero
}

inline Checked checked_neg(std::int64_t a) {
  if (a == INT64_MIN) return ArithFault::overflow;
  return -a;
}

/// Exponentiation by repeated squaring. 0^0 = 1; a negative exponent is a
/// fault. The base is squared only while unconsumed exponent bits remain, so
/// an intermediate overflow implies the true result overflows too.
inline Checked checked_pow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) return ArithFault::negative_exponent;
  std::int64_t result = 1;
  std::int64_t b = base;
  std::uint64_t e = static_cast<std::uint64_t>(exp);
  while (e > 0) {
    if (e & 1) {
      Checked r = checked_mul(result, b);
      if (std::holds_alternative<ArithFault>(r)) return r;
      result = std::get<std::int64_t>(r);
    }
    e >>= 1;
    if (e > 0) {
      Checked r = checked_mul(b, b);
      if (std::holds_alternative<ArithFault>(r)) return r;
      b = std::get<std::int64_t>(r);
    }
  }
  return result;
}

}  // namespace subspec
