#include "casimir/material.hpp"

#include <string>

#include "casimir/physical_constants.hpp"

namespace casimir {

namespace {

void require_nonnegative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string("relaxation law: ") + name + " must be finite and >= 0");
  }
}

struct LawValidator {
  void operator()(const ConstantRelaxation& r) const { require_nonnegative(r.omega_tau, "omega_tau"); }
  void operator()(const PowerLawRelaxation& r) const {
    require_nonnegative(r.omega_tau0, "omega_tau0");
    if (!(r.T_ref > 0.0)) throw DomainError("relaxation law: T_ref must be > 0");
    if (!(r.exponent >= 1.0)) throw DomainError("relaxation law: exponent must be >= 1");
  }
  void operator()(const ResidualPowerLawRelaxation& r) const {
    require_nonnegative(r.omega_res, "omega_res");
    (*this)(PowerLawRelaxation{r.omega_tau0, r.T_ref, r.exponent});
  }
};

struct LawEvaluator {
  double T;
  double operator()(const ConstantRelaxation& r) const { return r.omega_tau; }
  double operator()(const PowerLawRelaxation& r) const {
    return r.omega_tau0 * std::pow(T / r.T_ref, r.exponent);
  }
  double operator()(const ResidualPowerLawRelaxation& r) const {
    return r.omega_res + r.omega_tau0 * std::pow(T / r.T_ref, r.exponent);
  }
};

void require_positive_spectral(double zeta, double k) {
  if (!(zeta > 0.0)) throw DomainError("dielectric function: zeta must be > 0");
  if (!(k > 0.0)) throw DomainError("dielectric function: k must be > 0");
}

}  // namespace

void MetalModel::validate() const {
  if (!(omega_p > 0.0) || !std::isfinite(omega_p)) throw DomainError("MetalModel: omega_p must be > 0");
  if (!(v_F > 0.0) || !(v_F < si::c)) throw DomainError("MetalModel: v_F must satisfy 0 < v_F < c");
  std::visit(LawValidator{}, relaxation);
}

MetalModel gold_like(ResponseKind response) {
  return MetalModel{1.37e16, 1.4e6, PowerLawRelaxation{5.32e13, 300.0, 5.0}, response};
}

double relaxation_frequency(const RelaxationLaw& law, double T) {
  if (!(T >= 0.0)) throw DomainError("relaxation_frequency: T must be >= 0");
  std::visit(LawValidator{}, law);
  return std::visit(LawEvaluator{T}, law);
}

double relaxation_frequency(const MetalModel& model, double T) {
  return relaxation_frequency(model.relaxation, T);
}

DielectricPair dielectric_nonlocal(const MetalModel& model, double zeta, double k, double T) {
  model.validate();
  require_positive_spectral(zeta, k);
  return dielectric_nonlocal_at(model.omega_p, model.v_F, relaxation_frequency(model, T), zeta, k);
}

DielectricPair dielectric_anomalous(const MetalModel& model, double zeta, double k) {
  model.validate();
  require_positive_spectral(zeta, k);
  return dielectric_anomalous_at(model.omega_p, model.v_F, zeta, k);
}

double dielectric_local(const MetalModel& model, double zeta, double T) {
  model.validate();
  if (!(zeta > 0.0)) throw DomainError("dielectric_local: zeta must be > 0");
  switch (model.response) {
    case ResponseKind::LocalDrude:
      return dielectric_drude_at(model.omega_p, relaxation_frequency(model, T), zeta);
    case ResponseKind::LocalPlasma:
      return dielectric_drude_at(model.omega_p, 0.0, zeta);
    default:
      throw DomainError("dielectric_local: model response is not local");
  }
}

}  // namespace casimir
