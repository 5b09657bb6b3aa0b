#pragma once

#include <compare>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace vboe {

using Vertex = int;
using Bit = std::uint8_t;

// Measurement angles live on the discrete set {k*pi/4 : k = 0..7}. Storing
// the integer k keeps every angle update exact.
class Angle {
 public:
  static constexpr int kCount = 8;

  constexpr Angle() = default;
  constexpr explicit Angle(int units) : units_(wrap(units)) {}

  static constexpr Angle pi() { return Angle(4); }

  constexpr int units() const { return units_; }
  double radians() const { return units_ * std::numbers::pi / 4.0; }

  constexpr Angle operator-() const { return Angle(-units_); }
  friend constexpr Angle operator+(Angle a, Angle b) { return Angle(a.units_ + b.units_); }
  friend constexpr Angle operator-(Angle a, Angle b) { return Angle(a.units_ - b.units_); }
  constexpr Angle& operator+=(Angle other) { return *this = *this + other; }

  // (-1)^sign * a
  static constexpr Angle signed_by(Bit sign, Angle a) { return sign ? -a : a; }
  // b * pi
  static constexpr Angle pi_times(Bit b) { return Angle(4 * (b & 1)); }

  friend constexpr bool operator==(Angle, Angle) = default;
  friend constexpr auto operator<=>(Angle, Angle) = default;

 private:
  static constexpr int wrap(int u) { return ((u % kCount) + kCount) % kCount; }
  int units_ = 0;
};

enum class ErrorCode {
  IndexOutOfRange,
  EqualIndices,
  ZeroNormProjection,
  DimensionMismatch,
  BadDistribution,
  InvalidFlow,
  UnknownVertex,
  InvalidPattern,
  ServerTimeout,
  ProtocolOrderViolation,
  NotATrap,
  InvalidParams,
  BadParams,
  DirectionMismatch,
  EmptyInput,
  ConfigError,
  ParseError,
  MismatchFound,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vboe
