#include "tapergp/taper.hpp"

#include <cmath>

namespace tapergp {

namespace {

const double kSqrt67 = std::sqrt(6.0 / 7.0);

double iv_entry(double r, int k, int l) {
  if (r >= 1.0) return 0.0;
  const double s = 1.0 - r;
  const double s5 = s * s * s * s * s;
  if (k == 1 && l == 1) return s5 * (1.0 + 5.0 * r);
  const double base = s5 * (1.0 + 5.0 * r + r * r);
  return (k == l) ? base : kSqrt67 * base;
}

}  // namespace

TaperFamily taper_family_from_name(const std::string& name) {
  if (name == "wendland1" || name == "i") return TaperFamily::wendland1;
  if (name == "wendland2" || name == "ii") return TaperFamily::wendland2;
  if (name == "spherical" || name == "iii") return TaperFamily::spherical;
  if (name == "multivariate_iv" || name == "iv") return TaperFamily::multivariate_iv;
  if (name == "custom") return TaperFamily::custom;
  throw ParameterError("unknown taper family '" + name + "'");
}

std::string taper_family_name(TaperFamily family) {
  switch (family) {
    case TaperFamily::wendland1: return "wendland1";
    case TaperFamily::wendland2: return "wendland2";
    case TaperFamily::spherical: return "spherical";
    case TaperFamily::multivariate_iv: return "multivariate_iv";
    case TaperFamily::custom: return "custom";
  }
  return "?";
}

TaperSpec make_taper(TaperFamily family, double gamma, int p) {
  if (family == TaperFamily::custom)
    throw ParameterError("make_taper: use make_custom_taper for custom tables");
  if (!(gamma > 0.0)) throw ParameterError("make_taper: gamma > 0 required");
  if (p < 1) throw ParameterError("make_taper: p >= 1 required");
  if (family == TaperFamily::multivariate_iv && p != 2)
    throw ParameterError("make_taper: family (iv) is bivariate");
  TaperSpec spec;
  spec.p = p;
  spec.family = family;
  spec.gamma = gamma;
  return spec;
}

TaperSpec make_custom_taper(std::vector<std::function<double(double)>> table,
                            double gamma, int p) {
  if (!(gamma > 0.0)) throw ParameterError("make_custom_taper: gamma > 0 required");
  if (p < 1 || table.size() != static_cast<size_t>(p) * p)
    throw ParameterError("make_custom_taper: need a p*p entry table");
  TaperSpec spec;
  spec.p = p;
  spec.family = TaperFamily::custom;
  spec.gamma = gamma;
  spec.custom = std::move(table);
  return spec;
}

double taper_value(double dist, int k, int l, const TaperSpec& spec) {
  if (!std::isfinite(dist) || dist < 0.0)
    throw ParameterError("taper_value: bad distance");
  if (k < 0 || l < 0 || k >= spec.p || l >= spec.p)
    throw ParameterError("taper_value: component out of range");
  if (std::isinf(spec.gamma)) return 1.0;  // tapering disabled
  const double r = dist / spec.gamma;
  switch (spec.family) {
    case TaperFamily::wendland1: return wendland1_unit(r);
    case TaperFamily::wendland2: return wendland2_unit(r);
    case TaperFamily::spherical: return spherical_unit(r);
    case TaperFamily::multivariate_iv: return iv_entry(r, k, l);
    case TaperFamily::custom: return r >= 1.0 ? 0.0 : spec.custom[k * spec.p + l](r);
  }
  return 0.0;
}

double taper_value(const VectorXd& lag, int k, int l, const TaperSpec& spec) {
  if (!lag.allFinite()) throw ParameterError("taper_value: non-finite lag");
  return taper_value(lag.norm(), k, l, spec);
}

double support_radius(const TaperSpec& spec) { return spec.gamma; }

Condition4Report validate_condition4(const TaperSpec& spec) {
  Condition4Report rep{true, {}};
  const int probes = 201;
  for (int k = 0; k < spec.p; ++k)
    for (int l = 0; l < spec.p; ++l) {
      bool bad = std::abs(taper_value(0.0, k, l, spec) - 1.0) > 1e-12;
      for (int i = 0; i < probes && !bad; ++i) {
        double r = spec.gamma * (static_cast<double>(i) / (probes - 1));
        if (std::isinf(spec.gamma)) r = 0.0;
        if (std::abs(taper_value(r, k, l, spec)) > 1.0 + 1e-12) bad = true;
      }
      if (bad) {
        rep.holds = false;
        rep.offending.emplace_back(k, l);
      }
    }
  return rep;
}

}  // namespace tapergp
