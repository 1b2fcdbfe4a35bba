#include "steiner/perturb.hpp"

#include <cmath>

namespace steiner {

namespace {

Cost round_clamp(double x, Cost cap) {
  if (x <= 0.0) return 0;
  double r = std::floor(x + 0.5);
  if (r >= static_cast<double>(cap)) return cap;
  return static_cast<Cost>(r);
}

double draw_factor(double q, double tau, Rng& rng) {
  double rho = rng.next_double();
  if (rho >= tau) return 1.0 + rho * q;
  return rho / tau;
}

}  // namespace

PerturbationProfile sample_profile(const Instance& inst, Rng& rng) {
  PerturbationProfile p;
  p.kind = rng.next_bool() ? PerturbationProfile::Kind::kVertex : PerturbationProfile::Kind::kEdge;
  p.max_perturbation = rng.next_double(1.25, 2.00);
  const double n = static_cast<double>(inst.vertex_count());
  p.tau = n > 1.0 ? std::log2(n) / n : 0.0;
  const int count = p.kind == PerturbationProfile::Kind::kEdge ? inst.edge_count()
                                                               : inst.vertex_count();
  p.factors.resize(count);
  for (int i = 0; i < count; ++i) p.factors[i] = draw_factor(p.max_perturbation, p.tau, rng);
  return p;
}

CostView apply(const PerturbationProfile& profile, const Instance& inst) {
  CostView view;
  view.edge_cost.resize(inst.edge_count());
  const Cost cap = inst.cost_cap();
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    const Edge& ed = inst.edge(e);
    double f = profile.kind == PerturbationProfile::Kind::kEdge
                   ? profile.factors[e]
                   : 0.5 * (profile.factors[ed.u] + profile.factors[ed.v]);
    view.edge_cost[e] = round_clamp(static_cast<double>(ed.cost) * f, cap);
  }
  return view;
}

CostView decay(const CostView& view, const Instance& inst, double alpha) {
  CostView out;
  out.edge_cost.resize(inst.edge_count());
  const Cost cap = inst.cost_cap();
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    double mixed = alpha * static_cast<double>(view.edge_cost[e]) +
                   (1.0 - alpha) * static_cast<double>(inst.edge(e).cost);
    out.edge_cost[e] = round_clamp(mixed, cap);
  }
  return out;
}

}  // namespace steiner
