// Copyright 2026 The ferrosim Authors. All Rights Reserved.
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

#pragma once

namespace ferro::fefet {

struct SemiconductorParams {
  double n_d = 5e24;   // m^-3
  double n_i = 1e16;   // m^-3
  double eps_s = 11.7;
  double t_c = 20e-9;   // m
  double l_c = 500e-9;  // m
  double width = 1e-6;  // m
  double mu = 1e-2;     // m^2/(V s)
  double v_ds = 0.05;   // V
  double v_fb = 0.0;    // V
  double temperature = 300.0;  // K
};

// Throws InvalidParameter naming the offending field.
void validate(const SemiconductorParams& semi);

// Bulk MOS areal charge (C/m^2) of an n-type film at surface potential
// psi_s. Positive psi_s accumulates electrons (negative charge). Throws
// RangeGuard for |psi_s| >= 2 V.
double semiconductor_charge(double psi_s, const SemiconductorParams& semi);

struct GateStackSolution {
  double psi_s;  // V
  double e_f;    // V/m, axis from gate toward channel
  double v_f;    // V
  double q_s;    // C/m^2
};

// Ferroelectric/semiconductor stack at gate bias v_gs with polarization p:
//   eps0 eps_f e_f + p = -Q_s(psi_s),  v_gs - v_fb = e_f t_f + psi_s.
// Throws BracketFailure when no root lies inside the psi_s guard range and
// NonConvergence when the residual exceeds 1e-9 V.
GateStackSolution solve_gate_stack(double v_gs, double p, double eps_f, double t_f,
                                   const SemiconductorParams& semi);

// Same root, bracketed outward from psi_hint (a nearby previous solution).
GateStackSolution solve_gate_stack(double v_gs, double p, double eps_f, double t_f,
                                   const SemiconductorParams& semi, double psi_hint);

// Both residuals of a solution, expressed in volts.
struct GateStackResidual {
  double voltage;       // v_gs - v_fb - e_f t_f - psi_s
  double displacement;  // (eps0 eps_f e_f + p + Q_s) t_f / (eps0 eps_f)
};
GateStackResidual gate_stack_residual(const GateStackSolution& sol, double v_gs, double p,
                                      double eps_f, double t_f, const SemiconductorParams& semi);

// Depletion width min(t_c, sqrt(2 eps0 eps_s |min(psi_s, 0)| / (q n_d))).
double depletion_width(double psi_s, const SemiconductorParams& semi);

// Undepleted-film electrons plus accumulation-layer electrons (C/m^2, >= 0).
double mobile_sheet_charge(const GateStackSolution& sol, const SemiconductorParams& semi);

}  // namespace ferro::fefet
