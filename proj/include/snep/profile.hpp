#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace snep {

/// Agent block sizes n_1..n_N of a stacked decision vector. Immutable and cheap
/// to copy (the offsets table is shared).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::size_t> block_sizes);

  std::size_t agents() const noexcept { return data_ ? data_->sizes.size() : 0; }
  std::size_t dimension() const noexcept { return data_ ? data_->dimension : 0; }
  std::size_t size(std::size_t agent) const { return data_->sizes.at(agent); }
  std::size_t offset(std::size_t agent) const { return data_->offsets.at(agent); }
  const std::vector<std::size_t>& sizes() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.sizes() == b.sizes(); }

 private:
  struct Data {
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> offsets;
    std::size_t dimension = 0;
  };
  std::shared_ptr<const Data> data_;
};

/// A stacked profile col(x_1, ..., x_N) together with its agent partition.
class DecisionProfile {
 public:
  DecisionProfile(Eigen::VectorXd values, Partition partition);

  const Eigen::VectorXd& values() const noexcept { return values_; }
  const Partition& partition() const noexcept { return partition_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(values_.size()); }
  std::size_t agents() const noexcept { return partition_.agents(); }

  Eigen::VectorXd block(std::size_t agent) const;
  std::vector<Eigen::VectorXd> split() const;

  /// Re-stacks per-agent blocks; the partition is taken from the block lengths.
  static DecisionProfile stack(std::span<const Eigen::VectorXd> blocks);

  /// Same partition, new values.
  DecisionProfile with_values(Eigen::VectorXd values) const;

 private:
  Eigen::VectorXd values_;
  Partition partition_;
};

/// Throws DimensionMismatch when the partition does not sum to values.size(),
/// InvalidParameter when a block size is zero.
DecisionProfile make_profile(Eigen::VectorXd values, std::vector<std::size_t> partition);

}  // namespace snep
