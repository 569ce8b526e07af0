#pragma once

#include <optional>
#include <string>

#include "copgeo/rational.hpp"

namespace copgeo {

/// Dependence quantities of one copula.
///
/// `omega_area` is the Lebesgue measure of {h(x) <= y, h^{-1}(y) <= x}; for
/// mutually completely dependent copulas it determines tau, ell and surf
/// through fixed affine maps. `omega_exact` / `tau_exact` are filled when the
/// value is a known rational. The `exact` flags say which fields came from a
/// closed form applied to exact input rather than from numerical integration.
struct MeasureReport {
  struct Exactness {
    bool omega = false;
    bool tau = false;
    bool ell = false;
    bool surf = false;
    bool rho = false;
  };

  std::string method;  // "exact-mcd" | "numeric-grid" | "fixed-point" | "monte-carlo"

  double omega_area = 0;
  double tau = 0;
  double ell = 0;
  double surf = 0;
  std::optional<double> rho;

  std::optional<Rational> omega_exact;
  std::optional<Rational> tau_exact;
  std::optional<Rational> rho_exact;

  Exactness exact;
};

/// Builds the closed-form report for an MCD copula from its omega area.
MeasureReport report_from_omega(const Rational& omega, bool exact_input, std::string method);
MeasureReport report_from_omega(double omega, std::string method);

/// JSON rendering with a fixed key order. Rational fields are emitted as
/// "p/q" strings next to their float values.
std::string to_json(const MeasureReport& report, int indent = -1);

}  // namespace copgeo
