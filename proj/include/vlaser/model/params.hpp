#pragma once

#include <string>
#include <vector>

#include "vlaser/core/error.hpp"

namespace vlaser {

// Every rate and detuning of the driven V-system plus cavity, in one
// consistent angular-frequency unit (presets use Gamma3 = 1). The solvers
// are scale-invariant; unit conversion happens at the config boundary.
//
// kappa is stored exactly as it appears in the cavity Liouvillian
//   kappa (2 a rho a' - a'a rho - rho a'a),
// i.e. the cavity field half-linewidth: the photon loss rate is 2*kappa.
// Figure captions quoting "kappa = 50 Gamma2" map 1:1 onto this field.
struct ModelParams {
  double gamma2 = 0.0, gamma3 = 0.0;  // decay rates |2>->|1>, |3>->|1>
  double omega2 = 0.0, omega3 = 0.0;  // Rabi amplitudes, H = Omega_i (sigma_i1 + sigma_1i)
  double delta2 = 0.0, delta3 = 0.0;  // pump detunings omega_li - omega_i
  double nu2 = 0.0, nu3 = 0.0;        // pump laser linewidths (dephasing rates)
  double delta_c = 0.0;               // cavity detuning omega_l2 - omega_c
  double g = 0.0;                     // atom-cavity coupling on |1><->|2|
  double kappa = 0.0;                 // cavity field half-linewidth
  long long n_atoms = 1;
  double gamma23 = 0.0;               // incoherent |2> -> |3> repump

  void validate() const {
    require(gamma2 >= 0 && gamma3 >= 0 && nu2 >= 0 && nu3 >= 0 && kappa >= 0 && g >= 0 &&
                gamma23 >= 0,
            "ModelParams: rates must be >= 0");
    require(gamma3 > gamma2, "ModelParams: requires gamma3 > gamma2 (got ", gamma3, " <= ",
            gamma2, ")");
    require(n_atoms >= 1, "ModelParams: n_atoms = ", n_atoms, " (must be >= 1)");
  }
};

// Incoherent |2>->|3> rate giving an M-fold faster effective decay of |2>.
inline double repump_rate(double m_fold, double gamma2) {
  require(m_fold > 1.0, "repump_rate: M must be > 1, got ", m_fold);
  return (m_fold - 1.0) / m_fold * gamma2;
}

// The (M-1)/M Gamma2 formula presumes Gamma2 * M << Gamma3.
inline bool repump_regime_ok(double m_fold, double gamma2, double gamma3) {
  return m_fold * gamma2 <= gamma3 / 10.0;
}

// Named atomic species; rates in internal units (gamma3 = 1) plus the SI
// context needed by the motion module.
struct AtomPreset {
  std::string name;
  double decay_ratio;    // gamma3 / gamma2
  double gamma2_si;      // rad/s
  double gamma3_si;      // rad/s
  double mass_amu;
  double lambda2_m;      // narrow (lasing) pump wavelength
  double lambda3_m;      // broad (cooling) pump wavelength
  double omega2_abs_si;  // absolute narrow transition angular frequency

  // base params in internal units: gamma3 = 1
  ModelParams base() const {
    ModelParams p;
    p.gamma3 = 1.0;
    p.gamma2 = 1.0 / decay_ratio;
    return p;
  }
};

const std::vector<AtomPreset>& presets();
const AtomPreset& preset(const std::string& name);

}  // namespace vlaser
