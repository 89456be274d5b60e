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

#include "socnorm/polynomial.hpp"

#include "socnorm/belief.hpp"

namespace socnorm {

BernsteinPolynomial::BernsteinPolynomial(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double BernsteinPolynomial::operator()(double x) const {
  std::vector<double> work(coeffs_);
  const double y = 1.0 - x;
  for (std::size_t level = work.size() - 1; level > 0; --level) {
    for (std::size_t k = 0; k < level; ++k) {
      work[k] = y * work[k] + x * work[k + 1];
    }
  }
  return work[0];
}

BernsteinPolynomial BernsteinPolynomial::Derivative() const {
  const int n = degree();
  if (n == 0) return BernsteinPolynomial({0.0});
  std::vector<double> d(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) d[k] = n * (coeffs_[k + 1] - coeffs_[k]);
  return BernsteinPolynomial(std::move(d));
}

std::vector<double> BernsteinPolynomial::MonomialCoefficients() const {
  const int n = degree();
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    const double scaled = coeffs_[k] * BinomialCoefficientReal(n, k);
    // x^k (1 - x)^(n - k) = sum_i C(n - k, i) (-1)^i x^(k + i)
    for (int i = 0; i <= n - k; ++i) {
      const double term = scaled * BinomialCoefficientReal(n - k, i);
      a[k + i] += (i % 2 == 0) ? term : -term;
    }
  }
  return a;
}

}  // namespace socnorm
