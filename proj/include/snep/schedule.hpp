#pragma once

#include <cstdint>
#include <optional>

namespace snep {

/// Step-size (or regularization) sequence: either constant, or
/// scale * (offset + k)^(-exponent), optionally capped from above.
class StepSchedule {
 public:
  enum class Kind { constant, polynomial };

  static StepSchedule constant(double value, std::optional<double> cap = std::nullopt);
  static StepSchedule polynomial(double scale, double offset, double exponent,
                                 std::optional<double> cap = std::nullopt);

  double at(std::uint64_t k) const;

  /// sup_k at(k); the polynomial family is nonincreasing so this is at(0).
  double supremum() const { return at(0); }

  /// True for the polynomial family with exponent in (0.5, 1]: then the sum
  /// of the sequence diverges and the sum of its squares converges.
  bool is_vanishing_summable() const noexcept;

  Kind kind() const noexcept { return kind_; }
  double scale() const noexcept { return scale_; }
  double offset() const noexcept { return offset_; }
  double exponent() const noexcept { return exponent_; }
  const std::optional<double>& cap() const noexcept { return cap_; }

 private:
  StepSchedule(Kind kind, double scale, double offset, double exponent, std::optional<double> cap)
      : kind_(kind), scale_(scale), offset_(offset), exponent_(exponent), cap_(cap) {}

  Kind kind_;
  double scale_;
  double offset_;
  double exponent_;
  std::optional<double> cap_;
};

/// Mini-batch size sequence: constant S, or ceil(c * (k + offset)^(a + 1)).
class BatchSchedule {
 public:
  enum class Kind { constant, polynomial };

  static BatchSchedule constant(std::uint64_t size);
  static BatchSchedule polynomial(double scale, double offset, double growth);

  std::uint64_t at(std::uint64_t k) const;

  Kind kind() const noexcept { return kind_; }
  std::uint64_t size() const noexcept { return size_; }
  double scale() const noexcept { return scale_; }
  double offset() const noexcept { return offset_; }
  double growth() const noexcept { return growth_; }

 private:
  BatchSchedule(Kind kind, std::uint64_t size, double scale, double offset, double growth)
      : kind_(kind), size_(size), scale_(scale), offset_(offset), growth_(growth) {}

  Kind kind_;
  std::uint64_t size_;
  double scale_;
  double offset_;
  double growth_;
};

inline double step_at(const StepSchedule& schedule, std::uint64_t k) { return schedule.at(k); }
inline std::uint64_t batch_at(const BatchSchedule& schedule, std::uint64_t k) { return schedule.at(k); }

}  // namespace snep
