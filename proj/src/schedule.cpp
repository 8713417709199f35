#include "snep/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "snep/errors.hpp"

namespace snep {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw InvalidParameter(message);
}

void check_cap(const std::optional<double>& cap) {
  if (cap) require(std::isfinite(*cap) && *cap > 0, "schedule cap must be positive and finite");
}

}  // namespace

StepSchedule StepSchedule::constant(double value, std::optional<double> cap) {
  require(std::isfinite(value) && value >= 0, "constant schedule value must be finite and >= 0");
  check_cap(cap);
  return StepSchedule(Kind::constant, value, 0.0, 0.0, cap);
}

StepSchedule StepSchedule::polynomial(double scale, double offset, double exponent,
                                      std::optional<double> cap) {
  require(std::isfinite(scale) && scale >= 0, "polynomial schedule scale must be finite and >= 0");
  require(std::isfinite(offset) && offset > 0, "polynomial schedule offset must be > 0");
  require(std::isfinite(exponent) && exponent > 0, "polynomial schedule exponent must be > 0");
  check_cap(cap);
  return StepSchedule(Kind::polynomial, scale, offset, exponent, cap);
}

double StepSchedule::at(std::uint64_t k) const {
  double value = scale_;
  if (kind_ == Kind::polynomial)
    value = scale_ * std::pow(offset_ + static_cast<double>(k), -exponent_);
  if (cap_) value = std::min(value, *cap_);
  return value;
}

bool StepSchedule::is_vanishing_summable() const noexcept {
  return kind_ == Kind::polynomial && scale_ > 0 && exponent_ > 0.5 && exponent_ <= 1.0;
}

BatchSchedule BatchSchedule::constant(std::uint64_t size) {
  require(size >= 1, "constant batch size must be >= 1");
  return BatchSchedule(Kind::constant, size, 0.0, 0.0, 0.0);
}

BatchSchedule BatchSchedule::polynomial(double scale, double offset, double growth) {
  require(std::isfinite(scale) && scale > 0, "batch scale c must be > 0");
  require(std::isfinite(offset) && offset > 0, "batch offset k0 must be > 0");
  require(std::isfinite(growth) && growth > 0, "batch growth a must be > 0");
  return BatchSchedule(Kind::polynomial, 0, scale, offset, growth);
}

std::uint64_t BatchSchedule::at(std::uint64_t k) const {
  if (kind_ == Kind::constant) return size_;
  const double raw = std::ceil(scale_ * std::pow(static_cast<double>(k) + offset_, growth_ + 1.0));
  constexpr double limit = static_cast<double>(std::numeric_limits<std::uint64_t>::max() / 2);
  if (!(raw < limit)) return static_cast<std::uint64_t>(limit);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(raw));
}

}  // namespace snep
