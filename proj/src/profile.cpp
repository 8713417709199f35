#include "snep/profile.hpp"

#include <numeric>
#include <string>

#include "snep/errors.hpp"

namespace snep {

Partition::Partition(std::vector<std::size_t> block_sizes) {
  auto data = std::make_shared<Data>();
  data->offsets.reserve(block_sizes.size());
  for (std::size_t i = 0; i < block_sizes.size(); ++i) {
    if (block_sizes[i] == 0)
      throw InvalidParameter("partition block " + std::to_string(i) + " has size zero");
    data->offsets.push_back(data->dimension);
    data->dimension += block_sizes[i];
  }
  data->sizes = std::move(block_sizes);
  data_ = std::move(data);
}

const std::vector<std::size_t>& Partition::sizes() const {
  static const std::vector<std::size_t> empty;
  return data_ ? data_->sizes : empty;
}

DecisionProfile::DecisionProfile(Eigen::VectorXd values, Partition partition)
    : values_(std::move(values)), partition_(std::move(partition)) {
  if (partition_.dimension() != static_cast<std::size_t>(values_.size()))
    throw DimensionMismatch("partition sums to " + std::to_string(partition_.dimension()) +
                            " but the vector has length " + std::to_string(values_.size()));
}

Eigen::VectorXd DecisionProfile::block(std::size_t agent) const {
  return values_.segment(static_cast<Eigen::Index>(partition_.offset(agent)),
                         static_cast<Eigen::Index>(partition_.size(agent)));
}

std::vector<Eigen::VectorXd> DecisionProfile::split() const {
  std::vector<Eigen::VectorXd> blocks;
  blocks.reserve(agents());
  for (std::size_t i = 0; i < agents(); ++i) blocks.push_back(block(i));
  return blocks;
}

DecisionProfile DecisionProfile::stack(std::span<const Eigen::VectorXd> blocks) {
  std::vector<std::size_t> sizes;
  sizes.reserve(blocks.size());
  std::size_t total = 0;
  for (const auto& b : blocks) {
    sizes.push_back(static_cast<std::size_t>(b.size()));
    total += static_cast<std::size_t>(b.size());
  }
  Eigen::VectorXd values(static_cast<Eigen::Index>(total));
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    values.segment(at, b.size()) = b;
    at += b.size();
  }
  return DecisionProfile(std::move(values), Partition(std::move(sizes)));
}

DecisionProfile DecisionProfile::with_values(Eigen::VectorXd values) const {
  return DecisionProfile(std::move(values), partition_);
}

DecisionProfile make_profile(Eigen::VectorXd values, std::vector<std::size_t> partition) {
  return DecisionProfile(std::move(values), Partition(std::move(partition)));
}

}  // namespace snep
