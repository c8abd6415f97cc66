#include "interference/lim_model.hpp"

#include <cmath>
#include <string>

#include "interference/errors.hpp"

namespace interference {

namespace {

constexpr double kBoundTol = 1e-12;

void validate_unit(std::size_t unit, const LimCoeffs& b, std::size_t degree) {
    if (degree == 0)
        throw UsageError("linear-in-means model rejects degree-0 unit " + std::to_string(unit));
    const double corners[4] = {b.b1, b.b1 + b.b2, b.b1 + b.b3, b.b1 + b.b2 + b.b3};
    for (double c : corners) {
        if (!std::isfinite(c) || std::abs(c) > 1.0 + kBoundTol)
            throw UsageError("linear-in-means coefficients for unit " + std::to_string(unit) +
                             " violate the uniform bound |y| <= 1");
    }
}

}  // namespace

LimModel::LimModel(std::shared_ptr<const Network> net, std::vector<LimCoeffs> beta)
    : network_(std::move(net)), beta_(std::move(beta)) {
    if (!network_) throw UsageError("linear-in-means model requires a network");
    if (beta_.size() != network_->n())
        throw UsageError("coefficient count " + std::to_string(beta_.size()) +
                         " does not match n = " + std::to_string(network_->n()));
    for (std::size_t i = 0; i < beta_.size(); ++i)
        validate_unit(i, beta_[i], network_->degree(i));
}

LimModel LimModel::uniform(std::shared_ptr<const Network> net, LimCoeffs beta) {
    const std::size_t n = net ? net->n() : 0;
    return LimModel(std::move(net), std::vector<LimCoeffs>(n, beta));
}

double LimModel::outcome(std::size_t unit, const Intervention& z) const {
    const auto& nbrs = network_->neighbors(unit);
    double treated = 0.0;
    for (std::size_t j : nbrs) treated += z[j];
    const double fraction = treated / static_cast<double>(nbrs.size());
    const LimCoeffs& b = beta_[unit];
    return b.b1 + b.b2 * z[unit] + b.b3 * fraction;
}

std::vector<double> evaluate_outcomes(const LimModel& model, const Intervention& z) {
    if (z.size() != model.n()) throw UsageError("evaluate_outcomes: intervention length mismatch");
    std::vector<double> y(model.n());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = model.outcome(i, z);
    return y;
}

}  // namespace interference
