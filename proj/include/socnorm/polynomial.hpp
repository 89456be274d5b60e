// Copyright 2026 The socnorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOCNORM_POLYNOMIAL_HPP_
#define SOCNORM_POLYNOMIAL_HPP_

#include <span>
#include <vector>

namespace socnorm {

// Polynomial on [0, 1] stored in the Bernstein basis of its degree,
// p(x) = sum_k coeff[k] * C(n, k) x^k (1 - x)^(n - k). Evaluation uses
// de Casteljau, which stays accurate where monomial coefficients of
// the same polynomial would cancel badly.
class BernsteinPolynomial {
 public:
  BernsteinPolynomial() = default;
  explicit BernsteinPolynomial(std::vector<double> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coefficients() const { return coeffs_; }

  double operator()(double x) const;
  BernsteinPolynomial Derivative() const;

  // Ascending monomial coefficients a_0..a_n. Exact up to rounding for
  // small degree; ill-conditioned for large degree.
  std::vector<double> MonomialCoefficients() const;

 private:
  std::vector<double> coeffs_;
};

}  // namespace socnorm

#endif  // SOCNORM_POLYNOMIAL_HPP_
