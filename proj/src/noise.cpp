#include "snep/noise.hpp"

#include <cmath>
#include <random>

#include "snep/errors.hpp"

namespace snep {

NoiseModel NoiseModel::normal(Eigen::VectorXd mean, Eigen::VectorXd stddev) {
  if (mean.size() != stddev.size()) throw DimensionMismatch("normal noise: mean/stddev lengths differ");
  if (!mean.allFinite() || !stddev.allFinite() || (stddev.array() < 0).any())
    throw InvalidParameter("normal noise: stddev must be finite and >= 0");
  return NoiseModel(Kind::normal, std::move(mean), std::move(stddev));
}

NoiseModel NoiseModel::uniform(Eigen::VectorXd lower, Eigen::VectorXd upper) {
  if (lower.size() != upper.size()) throw DimensionMismatch("uniform noise: bound lengths differ");
  if (!lower.allFinite() || !upper.allFinite() || (lower.array() > upper.array()).any())
    throw InvalidParameter("uniform noise: need finite lower <= upper");
  return NoiseModel(Kind::uniform, std::move(lower), std::move(upper));
}

NoiseModel NoiseModel::degenerate(Eigen::VectorXd value) {
  Eigen::VectorXd unused = Eigen::VectorXd::Zero(value.size());
  return NoiseModel(Kind::degenerate, std::move(value), std::move(unused));
}

Eigen::VectorXd NoiseModel::mean() const {
  if (kind_ == Kind::uniform) return 0.5 * (first_ + second_);
  return first_;
}

Eigen::VectorXd NoiseModel::variance() const {
  switch (kind_) {
    case Kind::normal:
      return second_.cwiseProduct(second_);
    case Kind::uniform:
      return (second_ - first_).array().square() / 12.0;
    case Kind::degenerate:
      break;
  }
  return Eigen::VectorXd::Zero(first_.size());
}

Eigen::VectorXd NoiseModel::draw(SplitMix64& engine) const {
  const Eigen::Index d = first_.size();
  Eigen::VectorXd out(d);
  switch (kind_) {
    case Kind::normal:
      for (Eigen::Index i = 0; i < d; ++i) {
        std::normal_distribution<double> dist(first_[i], second_[i]);
        out[i] = second_[i] > 0 ? dist(engine) : first_[i];
      }
      break;
    case Kind::uniform:
      for (Eigen::Index i = 0; i < d; ++i)
        out[i] = first_[i] + (second_[i] - first_[i]) * unit_interval(engine);
      break;
    case Kind::degenerate:
      out = first_;
      break;
  }
  return out;
}

Eigen::VectorXd NoiseModel::draw(const RngStream& stream) const {
  auto engine = stream.engine();
  return draw(engine);
}

std::optional<Eigen::VectorXd> NoiseModel::draw_average(std::uint64_t count, const RngStream& stream) const {
  if (count == 0) throw InvalidParameter("batch size must be >= 1");
  switch (kind_) {
    case Kind::degenerate:
      return first_;
    case Kind::normal: {
      // The mean of `count` i.i.d. N(m, s^2) draws is N(m, s^2 / count).
      auto shrunk = NoiseModel::normal(first_, second_ / std::sqrt(static_cast<double>(count)));
      return shrunk.draw(stream);
    }
    case Kind::uniform:
      break;
  }
  return std::nullopt;
}

NoiseModel& NoiseModel::set_variance_bound(double bound) {
  if (!(bound >= 0) || !std::isfinite(bound)) throw InvalidParameter("variance bound must be >= 0");
  variance_bound_ = bound;
  return *this;
}

}  // namespace snep
