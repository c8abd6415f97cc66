#pragma once

#include <memory>
#include <vector>

#include "interference/intervention.hpp"
#include "interference/network.hpp"

namespace interference {

struct LimCoeffs {
    double b1 = 0.0;  // intercept
    double b2 = 0.0;  // own-treatment effect
    double b3 = 0.0;  // treated-neighbor-fraction effect
};

/// Linear-in-means potential outcomes: y_i(z) = b1 + b2*z_i + b3*T_i(z),
/// with T_i the fraction of i's neighbors that are treated.
///
/// The outcome is affine in z_i in {0,1} and T_i in [0,1], so the uniform
/// bound |y_i| <= 1 holds exactly when all four corner values
/// b1, b1+b2, b1+b3, b1+b2+b3 lie in [-1, 1]; the constructor rejects
/// violations. Units of degree zero are rejected because the (b1, b2, b3)
/// parameterization is not identified for them.
class LimModel {
  public:
    LimModel(std::shared_ptr<const Network> net, std::vector<LimCoeffs> beta);

    /// Uniform coefficients across all units.
    static LimModel uniform(std::shared_ptr<const Network> net, LimCoeffs beta);

    const std::shared_ptr<const Network>& network() const { return network_; }
    const std::vector<LimCoeffs>& beta() const { return beta_; }
    std::size_t n() const { return beta_.size(); }

    double outcome(std::size_t unit, const Intervention& z) const;

  private:
    std::shared_ptr<const Network> network_;
    std::vector<LimCoeffs> beta_;
};

std::vector<double> evaluate_outcomes(const LimModel& model, const Intervention& z);

}  // namespace interference
