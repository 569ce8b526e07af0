#include "copgeo/measure_report.hpp"

#include <charconv>

#include "copgeo/mcd_geometry.hpp"
#include "report_json.hpp"

namespace copgeo {

MeasureReport report_from_omega(const Rational& omega, bool exact_input, std::string method) {
  MeasureReport r;
  r.method = std::move(method);
  r.omega_area = omega.get_d();
  const Rational tau = kendall_tau_mcd(omega);
  r.tau = tau.get_d();
  r.ell = length_measure_mcd(r.omega_area);
  r.surf = surface_area_mcd(r.omega_area);
  if (exact_input) {
    r.omega_exact = omega;
    r.tau_exact = tau;
  }
  r.exact = {exact_input, exact_input, exact_input, exact_input, false};
  return r;
}

MeasureReport report_from_omega(double omega, std::string method) {
  MeasureReport r;
  r.method = std::move(method);
  r.omega_area = omega;
  r.tau = kendall_tau_mcd(omega);
  r.ell = length_measure_mcd(omega);
  r.surf = surface_area_mcd(omega);
  return r;
}

namespace detail {

std::string shortest(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

nlohmann::ordered_json report_json(const MeasureReport& report) {
  nlohmann::ordered_json j;
  j["method"] = report.method;
  j["omega"] = report.omega_exact ? to_string(*report.omega_exact) : shortest(report.omega_area);
  j["omega_value"] = report.omega_area;
  j["tau"] = report.tau_exact ? to_string(*report.tau_exact) : shortest(report.tau);
  j["tau_value"] = report.tau;
  j["ell"] = report.ell;
  j["surf"] = report.surf;
  if (report.rho_exact)
    j["rho"] = to_string(*report.rho_exact);
  else if (report.rho)
    j["rho"] = shortest(*report.rho);
  else
    j["rho"] = nullptr;
  j["rho_value"] = report.rho ? nlohmann::ordered_json(*report.rho) : nlohmann::ordered_json(nullptr);
  j["exact"] = {{"omega", report.exact.omega},
                {"tau", report.exact.tau},
                {"ell", report.exact.ell},
                {"surf", report.exact.surf},
                {"rho", report.exact.rho}};
  return j;
}

}  // namespace detail

std::string to_json(const MeasureReport& report, int indent) { return detail::report_json(report).dump(indent); }

}  // namespace copgeo
