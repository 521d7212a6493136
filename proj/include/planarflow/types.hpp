#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace planarflow {

using Vertex = std::int32_t;
using Dart = std::int32_t;
using Face = std::int32_t;
using Amount = std::int64_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr Dart kNoDart = -1;
inline constexpr Face kNoFace = -1;

// Arc i owns darts 2i (tail->head) and 2i+1 (head->tail).
constexpr Dart rev(Dart d) noexcept { return d ^ 1; }
constexpr Dart forward_dart(std::int32_t arc) noexcept { return 2 * arc; }
constexpr std::int32_t arc_of(Dart d) noexcept { return d >> 1; }

enum class ErrorKind {
  MalformedRotation,
  NonPlanarRotation,
  Disconnected,
  SelfLoop,
  NotSimple,
  WrongEndpoints,
  ParallelOnPath,
  NotACirculation,
  CapacityViolated,
  NotAFlow,
  NotCofacial,
  NotCwAcyclic,
  IndexOutOfRange,
  SummedCapacityViolated,
  TooManyPaths,
  ParseError,
  BadDimensions,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedRotation: return "MalformedRotation";
    case ErrorKind::NonPlanarRotation: return "NonPlanarRotation";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::WrongEndpoints: return "WrongEndpoints";
    case ErrorKind::ParallelOnPath: return "ParallelOnPath";
    case ErrorKind::NotACirculation: return "NotACirculation";
    case ErrorKind::CapacityViolated: return "CapacityViolated";
    case ErrorKind::NotAFlow: return "NotAFlow";
    case ErrorKind::NotCofacial: return "NotCofacial";
    case ErrorKind::NotCwAcyclic: return "NotCwAcyclic";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SummedCapacityViolated: return "SummedCapacityViolated";
    case ErrorKind::TooManyPaths: return "TooManyPaths";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadDimensions: return "BadDimensions";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Non-negative integer capacity per dart. c[d] and c[rev d] are independent.
class CapacityFn {
 public:
  CapacityFn() = default;
  explicit CapacityFn(std::size_t dart_count, Amount value = 0) : values_(dart_count, value) {
    if (value < 0) throw Error(ErrorKind::InvalidArgument, "negative capacity");
  }
  explicit CapacityFn(std::vector<Amount> values) : values_(std::move(values)) {
    for (std::size_t d = 0; d < values_.size(); ++d) {
      if (values_[d] < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative capacity on dart " + std::to_string(d));
      }
    }
  }

  Amount operator[](Dart d) const { return values_[static_cast<std::size_t>(d)]; }

  void set(Dart d, Amount value) {
    if (value < 0) {
      throw Error(ErrorKind::InvalidArgument, "negative capacity on dart " + std::to_string(d));
    }
    values_[static_cast<std::size_t>(d)] = value;
  }

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Amount> values() const noexcept { return values_; }
  Amount total() const { return std::accumulate(values_.begin(), values_.end(), Amount{0}); }

  friend bool operator==(const CapacityFn&, const CapacityFn&) = default;

 private:
  std::vector<Amount> values_;
};

/// Antisymmetric integer flow per dart: f[rev d] == -f[d] always holds.
class FlowAssignment {
 public:
  FlowAssignment() = default;
  explicit FlowAssignment(std::size_t dart_count) : values_(dart_count, 0) {
    if (dart_count % 2 != 0) throw Error(ErrorKind::InvalidArgument, "odd dart count");
  }

  /// Takes per-dart values that must already be antisymmetric.
  static FlowAssignment from_net(std::vector<Amount> values) {
    FlowAssignment f(values.size());
    for (std::size_t d = 0; d < values.size(); d += 2) {
      if (values[d] != -values[d + 1]) {
        throw Error(ErrorKind::NotAFlow, "values are not antisymmetric at dart " + std::to_string(d));
      }
    }
    f.values_ = std::move(values);
    return f;
  }

  /// Takes gross per-dart amounts and nets opposite directions against each other.
  static FlowAssignment from_gross(std::span<const Amount> gross) {
    FlowAssignment f(gross.size());
    for (std::size_t d = 0; d < gross.size(); d += 2) {
      f.set(static_cast<Dart>(d), gross[d] - gross[d + 1]);
    }
    return f;
  }

  Amount operator[](Dart d) const { return values_[static_cast<std::size_t>(d)]; }

  void set(Dart d, Amount value) {
    values_[static_cast<std::size_t>(d)] = value;
    values_[static_cast<std::size_t>(rev(d))] = -value;
  }

  void add(Dart d, Amount delta) {
    values_[static_cast<std::size_t>(d)] += delta;
    values_[static_cast<std::size_t>(rev(d))] -= delta;
  }

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Amount> values() const noexcept { return values_; }

  bool is_zero() const {
    for (Amount v : values_) {
      if (v != 0) return false;
    }
    return true;
  }

  FlowAssignment operator-() const {
    FlowAssignment out = *this;
    for (Amount& v : out.values_) v = -v;
    return out;
  }

  FlowAssignment& operator+=(const FlowAssignment& other) {
    if (other.size() != size()) throw Error(ErrorKind::InvalidArgument, "flow size mismatch");
    for (std::size_t d = 0; d < values_.size(); ++d) values_[d] += other.values_[d];
    return *this;
  }

  friend FlowAssignment operator+(FlowAssignment a, const FlowAssignment& b) { return a += b; }
  friend bool operator==(const FlowAssignment&, const FlowAssignment&) = default;

 private:
  std::vector<Amount> values_;
};

}  // namespace planarflow
