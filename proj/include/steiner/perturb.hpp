#ifndef STEINER_PERTURB_HPP
#define STEINER_PERTURB_HPP

#include <vector>

#include "steiner/cost_view.hpp"
#include "steiner/rng.hpp"

namespace steiner {

// Randomized cost perturbation. Each iteration draws a fresh profile: the
// kind (edge- or vertex-based) is a fair coin, the maximum perturbation Q is
// uniform in [1.25, 2.00], and each element's factor is 1 + rho*Q for
// rho ~ U[0,1] -- except that draws below the heavy-tail threshold
// tau = log2(n)/n map to rho/tau in [0,1), making a few elements
// significantly cheaper than everything else.
struct PerturbationProfile {
  enum class Kind { kEdge, kVertex };
  Kind kind;
  double max_perturbation;       // Q
  double tau;                    // (log2 n) / n
  std::vector<double> factors;   // per edge or per vertex
};

PerturbationProfile sample_profile(const Instance& inst, Rng& rng);

// Perturbed costs, rounded half-up to integers. Vertex-based profiles scale
// each edge by the average factor of its endpoints.
CostView apply(const PerturbationProfile& profile, const Instance& inst);

// One dampening step toward the original costs:
// cost' = alpha*view + (1-alpha)*original, rounded half-up.
CostView decay(const CostView& view, const Instance& inst, double alpha);

}  // namespace steiner

#endif
