#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "interference/enumeration.hpp"
#include "interference/intervention.hpp"
#include "interference/rng.hpp"

namespace interference {

/// Experimental design: a probability measure over {0,1}^n. Immutable.
class Design {
  public:
    enum class Kind { Bernoulli, ExplicitFinite };

    /// Independent coordinates, each treated with probability p in (0,1).
    static Design bernoulli(std::size_t n, double p);

    /// Finite support with explicit probabilities; they must be nonnegative
    /// and sum to 1 within 1e-12.
    static Design explicit_finite(std::vector<std::pair<Intervention, double>> atoms);

    Kind kind() const { return kind_; }
    std::size_t n() const { return n_; }
    double p() const { return p_; }
    const std::vector<std::pair<Intervention, double>>& atoms() const { return atoms_; }

    std::string to_string() const;

  private:
    Design() = default;

    Kind kind_ = Kind::Bernoulli;
    std::size_t n_ = 0;
    double p_ = 0.5;
    std::vector<std::pair<Intervention, double>> atoms_;
};

/// Draws one intervention from the design using the caller-owned stream.
Intervention sample(const Design& design, rng::Stream& stream);

/// Visits every support point with its exact probability. Bernoulli designs
/// enumerate all of Omega, so they require n <= cap.
void enumerate_design(const Design& design,
                      const std::function<void(const Intervention&, double)>& fn,
                      int cap = kDefaultEnumerationCap);

/// Parses the CLI design syntax "bernoulli:<p>".
Design parse_design(std::string_view text, std::size_t n);

}  // namespace interference
