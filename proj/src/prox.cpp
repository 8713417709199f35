#include "snep/prox.hpp"

#include <cmath>

#include "snep/errors.hpp"

namespace snep {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

ProxDescriptor box_prox(Eigen::VectorXd lower, Eigen::VectorXd upper) {
  if (lower.size() != upper.size())
    throw DimensionMismatch("box bounds have different lengths");
  if ((lower.array() > upper.array()).any())
    throw InvalidParameter("box lower bound exceeds upper bound");
  return BoxProx{std::move(lower), std::move(upper)};
}

ProxDescriptor box_prox(std::size_t dimension, double radius) {
  const auto n = static_cast<Eigen::Index>(dimension);
  return box_prox(Eigen::VectorXd::Constant(n, -radius), Eigen::VectorXd::Constant(n, radius));
}

ProxDescriptor identity_prox() { return IdentityProx{}; }

ProxDescriptor l1_prox(double weight) {
  if (!(weight >= 0) || !std::isfinite(weight)) throw InvalidParameter("l1 weight must be >= 0");
  return L1Prox{weight};
}

Eigen::VectorXd prox(const ProxDescriptor& desc, const Eigen::VectorXd& v, double gamma) {
  if (!v.allFinite()) throw NonFiniteInput("prox input is not finite");
  if (!(gamma > 0) || !std::isfinite(gamma)) throw InvalidParameter("prox step must be > 0");
  return std::visit(
      overloaded{
          [&](const BoxProx& box) -> Eigen::VectorXd {
            if (box.lower.size() != v.size()) throw DimensionMismatch("box prox dimension mismatch");
            return v.cwiseMax(box.lower).cwiseMin(box.upper);
          },
          [&](const IdentityProx&) -> Eigen::VectorXd { return v; },
          [&](const L1Prox& l1) -> Eigen::VectorXd {
            const double t = gamma * l1.weight;
            return v.unaryExpr([t](double c) {
              if (c > t) return c - t;
              if (c < -t) return c + t;
              return 0.0;
            });
          },
          [&](const CustomProx& custom) -> Eigen::VectorXd {
            Eigen::VectorXd out = custom.apply(v, gamma);
            if (out.size() != v.size()) throw DimensionMismatch("custom prox changed the dimension");
            return out;
          },
      },
      desc);
}

bool in_domain(const ProxDescriptor& desc, const Eigen::VectorXd& u) {
  return std::visit(overloaded{
                        [&](const BoxProx& box) {
                          return u.size() == box.lower.size() &&
                                 (u.array() >= box.lower.array()).all() &&
                                 (u.array() <= box.upper.array()).all();
                        },
                        [&](const IdentityProx&) { return u.allFinite(); },
                        [&](const L1Prox&) { return u.allFinite(); },
                        [&](const CustomProx& custom) {
                          return custom.contains ? custom.contains(u) : u.allFinite();
                        },
                    },
                    desc);
}

std::string describe(const ProxDescriptor& desc) {
  return std::visit(overloaded{
                        [](const BoxProx&) -> std::string { return "box"; },
                        [](const IdentityProx&) -> std::string { return "identity"; },
                        [](const L1Prox&) -> std::string { return "l1"; },
                        [](const CustomProx& c) -> std::string { return c.name; },
                    },
                    desc);
}

}  // namespace snep
