#include "interference/design.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "interference/errors.hpp"

namespace interference {

Design Design::bernoulli(std::size_t n, double p) {
    if (n == 0) throw UsageError("design requires n >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw UsageError("Bernoulli design requires p in (0,1), got " + std::to_string(p));
    Design d;
    d.kind_ = Kind::Bernoulli;
    d.n_ = n;
    d.p_ = p;
    return d;
}

Design Design::explicit_finite(std::vector<std::pair<Intervention, double>> atoms) {
    if (atoms.empty()) throw UsageError("explicit design requires at least one atom");
    const std::size_t n = atoms.front().first.size();
    double total = 0.0;
    for (const auto& [z, prob] : atoms) {
        if (z.size() != n) throw UsageError("explicit design atoms have mixed lengths");
        if (prob < 0.0) throw UsageError("explicit design has a negative probability");
        total += prob;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw UsageError("explicit design probabilities sum to " + std::to_string(total));
    Design d;
    d.kind_ = Kind::ExplicitFinite;
    d.n_ = n;
    d.atoms_ = std::move(atoms);
    return d;
}

std::string Design::to_string() const {
    if (kind_ == Kind::Bernoulli) {
        char buf[32];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p_);
        return "bernoulli:" + std::string(buf, ptr);
    }
    return "explicit[" + std::to_string(atoms_.size()) + "]";
}

Intervention sample(const Design& design, rng::Stream& stream) {
    if (design.kind() == Design::Kind::Bernoulli) {
        Intervention z(design.n());
        for (auto& bit : z.bits) bit = stream.bernoulli(design.p()) ? 1 : 0;
        return z;
    }
    const double u = stream.uniform01();
    double cumulative = 0.0;
    for (const auto& [z, prob] : design.atoms()) {
        cumulative += prob;
        if (u < cumulative) return z;
    }
    return design.atoms().back().first;
}

void enumerate_design(const Design& design,
                      const std::function<void(const Intervention&, double)>& fn, int cap) {
    if (design.kind() == Design::Kind::ExplicitFinite) {
        for (const auto& [z, prob] : design.atoms()) fn(z, prob);
        return;
    }
    const std::size_t n = design.n();
    require_enumerable(n, cap);
    // P(z) = p^(#treated) (1-p)^(n - #treated); powers precomputed once.
    std::vector<double> pow_p(n + 1, 1.0), pow_q(n + 1, 1.0);
    for (std::size_t k = 1; k <= n; ++k) {
        pow_p[k] = pow_p[k - 1] * design.p();
        pow_q[k] = pow_q[k - 1] * (1.0 - design.p());
    }
    for_each_intervention(
        n,
        [&](const Intervention& z, std::uint64_t mask) {
            const auto treated = static_cast<std::size_t>(std::popcount(mask));
            fn(z, pow_p[treated] * pow_q[n - treated]);
        },
        cap);
}

Design parse_design(std::string_view text, std::size_t n) {
    constexpr std::string_view prefix = "bernoulli:";
    if (text.substr(0, prefix.size()) != prefix)
        throw UsageError("unrecognized design spec '" + std::string(text) +
                         "'; expected bernoulli:<p>");
    const std::string value(text.substr(prefix.size()));
    std::size_t consumed = 0;
    double p = 0.0;
    try {
        p = std::stod(value, &consumed);
    } catch (const std::exception&) {
        throw UsageError("cannot parse design probability '" + value + "'");
    }
    if (consumed != value.size())
        throw UsageError("trailing characters in design probability '" + value + "'");
    return Design::bernoulli(n, p);
}

}  // namespace interference
