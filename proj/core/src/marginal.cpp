#include "interference/marginal.hpp"

#include <cmath>

#include "interference/errors.hpp"

namespace interference {

MarginalDist MarginalDist::factorized_signs(std::vector<double> prob_plus) {
    for (double p : prob_plus)
        if (!(p >= 0.0 && p <= 1.0))
            throw UsageError("factorized law needs coordinate probabilities in [0,1]");
    MarginalDist dist;
    dist.kind_ = Kind::FactorizedSigns;
    dist.n_ = prob_plus.size();
    dist.prob_plus_ = std::move(prob_plus);
    return dist;
}

MarginalDist MarginalDist::finite_support(std::map<std::vector<double>, double> atoms) {
    if (atoms.empty()) throw UsageError("finite-support law needs at least one atom");
    const std::size_t n = atoms.begin()->first.size();
    double total = 0.0;
    for (const auto& [point, prob] : atoms) {
        if (point.size() != n) throw UsageError("finite-support atoms have mixed lengths");
        if (prob < 0.0) throw UsageError("finite-support law has a negative probability");
        total += prob;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw UsageError("finite-support probabilities sum to " + std::to_string(total));
    MarginalDist dist;
    dist.kind_ = Kind::FiniteSupport;
    dist.n_ = n;
    dist.atoms_ = std::move(atoms);
    return dist;
}

MarginalDist MarginalDist::expanded(int cap) const {
    if (kind_ == Kind::FiniteSupport) return *this;
    require_enumerable(n_, cap);
    std::map<std::vector<double>, double> atoms;
    std::vector<double> point(n_);
    const std::uint64_t total = std::uint64_t{1} << n_;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        double prob = 1.0;
        for (std::size_t i = 0; i < n_; ++i) {
            const bool plus = (mask >> i) & 1u;
            point[i] = plus ? 1.0 : -1.0;
            prob *= plus ? prob_plus_[i] : 1.0 - prob_plus_[i];
        }
        if (prob > 0.0) atoms[point] += prob;
    }
    return finite_support(std::move(atoms));
}

namespace {

double half_l1(const std::map<std::vector<double>, double>& p,
               const std::map<std::vector<double>, double>& q) {
    double total = 0.0;
    auto it_p = p.begin();
    auto it_q = q.begin();
    while (it_p != p.end() || it_q != q.end()) {
        if (it_q == q.end() || (it_p != p.end() && it_p->first < it_q->first)) {
            total += it_p->second;
            ++it_p;
        } else if (it_p == p.end() || it_q->first < it_p->first) {
            total += it_q->second;
            ++it_q;
        } else {
            total += std::abs(it_p->second - it_q->second);
            ++it_p;
            ++it_q;
        }
    }
    return 0.5 * total;
}

}  // namespace

double tv_distance(const MarginalDist& p, const MarginalDist& q, int cap) {
    if (p.n() != q.n()) throw UsageError("tv_distance: laws have different dimensions");

    const bool both_factorized = p.kind() == MarginalDist::Kind::FactorizedSigns &&
                                 q.kind() == MarginalDist::Kind::FactorizedSigns;
    if (p.n() <= static_cast<std::size_t>(cap))
        return half_l1(p.expanded(cap).atoms(), q.expanded(cap).atoms());

    if (!both_factorized)
        throw UsageError("tv_distance: finite-support laws beyond the enumeration cap");
    if (p.prob_plus() == q.prob_plus()) return 0.0;
    throw UsageError(
        "tv_distance: exact value beyond the enumeration cap requires equal coordinate laws");
}

}  // namespace interference
