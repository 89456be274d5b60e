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

#ifndef SOCNORM_PARAMS_HPP_
#define SOCNORM_PARAMS_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace socnorm {

enum class ErrorCode {
  kInvalidArgument = 1,
  kOutOfRange = 2,
  kNotApplicable = 3,
  kCapExceeded = 4,
  kInfeasible = 5,
};

// Single exception type for the library; the C API maps `code()` onto
// status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Largest observation count for which exact integer binomial
// coefficients are used. The belief engine falls back to log-space
// evaluation up to kMaxObservations.
inline constexpr int kExactObservationLimit = 60;
inline constexpr int kMaxObservations = 1024;

// Request arrival rate. Fixed: every user requests once per period.
inline constexpr double kArrivalRate = 1.0;

enum class Label : std::uint8_t { kBad = 0, kGood = 1 };
enum class Action : std::uint8_t { kDefect = 0, kServe = 1 };

constexpr int ToInt(Label l) { return static_cast<int>(l); }
constexpr int ToInt(Action a) { return static_cast<int>(a); }

// Environment and mechanism parameters in canonical form: cost
// normalized to 1, so benefit == gamma. When constructed from (b, c)
// the raw values are kept for welfare reporting only.
class SystemParams {
 public:
  // Throws Error(kInvalidArgument) on any invariant violation.
  static SystemParams FromRatio(double gamma, double beta, double alpha,
                                int observations);
  static SystemParams FromBenefitCost(double benefit, double cost,
                                      double beta, double alpha,
                                      int observations);

  double gamma() const { return gamma_; }
  double beta() const { return beta_; }
  double alpha() const { return alpha_; }
  int observations() const { return observations_; }
  double benefit() const { return benefit_; }
  double cost() const { return cost_; }
  bool has_raw_benefit_cost() const { return raw_benefit_cost_; }

  SystemParams WithAlpha(double alpha) const;
  SystemParams WithObservations(int observations) const;

  std::string Describe() const;

 private:
  SystemParams() = default;
  void Validate() const;

  double gamma_ = 2.0;
  double beta_ = 0.5;
  double alpha_ = 1.0;
  int observations_ = 0;
  double benefit_ = 2.0;
  double cost_ = 1.0;
  bool raw_benefit_cost_ = false;
};

// Throws Error(kInvalidArgument) unless 0 <= value <= 1.
void RequireProbability(double value, const char* name);

}  // namespace socnorm

#endif  // SOCNORM_PARAMS_HPP_
