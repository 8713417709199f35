#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace snep {

// g = indicator of {lower <= u <= upper}.
struct BoxProx {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

// g = 0.
struct IdentityProx {};

// g(u) = weight * ||u||_1.
struct L1Prox {
  double weight = 0.0;
};

// User-supplied v, gamma -> argmin_u { gamma * g(u) + 0.5 * ||u - v||^2 }.
// `contains` is optional and, when set, reports whether a point lies in dom(g).
struct CustomProx {
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)> apply;
  std::function<bool(const Eigen::VectorXd&)> contains;
  std::string name = "custom";
};

using ProxDescriptor = std::variant<BoxProx, IdentityProx, L1Prox, CustomProx>;

ProxDescriptor box_prox(Eigen::VectorXd lower, Eigen::VectorXd upper);
ProxDescriptor box_prox(std::size_t dimension, double radius);
ProxDescriptor identity_prox();
ProxDescriptor l1_prox(double weight);

/// prox of gamma * g at v. Throws NonFiniteInput for non-finite v and
/// InvalidParameter for gamma <= 0, DimensionMismatch for a box of another size.
Eigen::VectorXd prox(const ProxDescriptor& desc, const Eigen::VectorXd& v, double gamma);

/// Whether u lies in dom(g). Always true for identity/l1, and for custom
/// descriptors without a `contains` predicate.
bool in_domain(const ProxDescriptor& desc, const Eigen::VectorXd& u);

std::string describe(const ProxDescriptor& desc);

}  // namespace snep
