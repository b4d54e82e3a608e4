#pragma once

// Cohomology classes of a flag variety in the basis {[Omega_alpha]},
// alpha in Sigma \ Theta.
//
// Normalization: coefficients are stored with the factor 2*pi absorbed, i.e.
// a stored coefficient c on [Omega_alpha] denotes the class whose integral
// over P^1_alpha is 2*pi*c. In these units the first Chern class has
// coefficients equal to the Koszul numbers, the tKE threshold reads
// beta_alpha < koszul_alpha, and pi never enters a stored value.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flagtke/error.hpp"
#include "flagtke/rational.hpp"

namespace flagtke {

struct CohomologyClass {
  std::vector<Rational> coeffs;

  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

  std::size_t size() const noexcept { return coeffs.size(); }
  bool is_integral() const {
    for (const auto& c : coeffs)
      if (!is_integer(c)) return false;
    return true;
  }
  bool is_positive() const {
    for (const auto& c : coeffs)
      if (c <= 0) return false;
    return true;
  }
  friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) {
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] -= b.coeffs[i];
    return a;
  }
  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) {
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
    return a;
  }
  friend CohomologyClass operator*(const Rational& s, CohomologyClass a) {
    for (auto& c : a.coeffs) c *= s;
    return a;
  }
};

/// A class with all coefficients strictly positive (the Kahler cone).
class KahlerClass {
 public:
  explicit KahlerClass(CohomologyClass c) : cls_(std::move(c)) {
    if (!cls_.is_positive())
      throw Error(Errc::non_positive_class, "Kahler class coefficients must be strictly positive");
  }
  explicit KahlerClass(std::vector<Rational> coeffs) : KahlerClass(CohomologyClass{std::move(coeffs)}) {}

  const CohomologyClass& cls() const noexcept { return cls_; }
  const std::vector<Rational>& coeffs() const noexcept { return cls_.coeffs; }
  std::size_t size() const noexcept { return cls_.size(); }

  friend bool operator==(const KahlerClass&, const KahlerClass&) = default;

 private:
  CohomologyClass cls_;
};

}  // namespace flagtke
