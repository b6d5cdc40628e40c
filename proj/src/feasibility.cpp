// Copyright 2026 The cqed-grover Authors
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

#include "cqed/feasibility.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "cqed/cavity.hpp"

namespace cqed {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be positive");
  }
}

std::string format_seconds(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g s", t);
  return buf;
}

}  // namespace

FeasibilityReport feasibility_report(const FeasibilityInputs& in) {
  require_positive(in.omega_over_2pi, "omega_over_2pi");
  require_positive(in.delta_over_omega, "delta_over_omega");
  require_positive(in.interaction_length, "interaction_length");
  require_positive(in.photon_lifetime, "photon_lifetime");
  if (in.total_time_override) require_positive(*in.total_time_override, "total_time");

  const auto params = CouplingParams::from_ratio(in.omega_over_2pi, in.delta_over_omega);
  FeasibilityReport r;
  r.lambda = params.lambda();
  r.lambda_over_2pi = r.lambda / (2.0 * std::numbers::pi);
  r.gate_time = qpg_gate_time(params);
  r.two_gate_time = 2.0 * r.gate_time;
  r.total_time = in.total_time_override.value_or(r.two_gate_time);
  r.velocity = in.interaction_length / r.total_time;
  r.lifetime_ratio = r.total_time / in.photon_lifetime;
  r.pass = r.lifetime_ratio < kLifetimeWarnRatio;

  if (!params.well_dispersive()) {
    r.notes.push_back("delta/Omega < 4: effective collision Hamiltonian is a poor approximation");
  }
  if (std::abs(r.two_gate_time - kNominalTwoGateTime) > 1e-3 * kNominalTwoGateTime) {
    r.notes.push_back("two-gate time from lambda t = pi is " + format_seconds(r.two_gate_time) +
                      "; nominal design figure is " + format_seconds(kNominalTwoGateTime));
  }
  r.notes.push_back("nominal total interaction time " + format_seconds(kNominalTotalInteraction) +
                    " is shorter than the nominal two-gate time " +
                    format_seconds(kNominalTwoGateTime));
  return r;
}

}  // namespace cqed
