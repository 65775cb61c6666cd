#pragma once

#include "invhyb/constraint_set.hpp"
#include "invhyb/types.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace invhyb {

enum class Phase { Flow, Jump };

// One single-valued selection of a set-valued map. clause < 0 means the
// selection applies on every clause of the governing constraint set;
// otherwise it is only offered where that clause holds.
struct MapSelection {
  std::string name;
  int clause = -1;
  std::function<Vec(const Vec& x, const Vec& u, const Vec& w, const Vec& p)> f;
};

// Set-valued map represented as a finite family of selections crossed
// with a parameter box. Verification enumerates selections at parameter
// box vertices, which is exact for parameter-affine maps.
struct ParamSetValuedMap {
  std::vector<MapSelection> selections;
  Box params;

  Vec eval(const Vec& x, const Vec& u, const Vec& w, int selection,
           const Vec& p) const {
    return selections.at(selection).f(x, u, w, p);
  }

  // Every selection value offered at (x,u,w) for the given clause
  // (clause < 0 keeps everything), one per selection-vertex combination.
  std::vector<Vec> values(const Vec& x, const Vec& u, const Vec& w,
                          int clause = -1) const;

  std::vector<int> selection_indices(int clause = -1) const;
};

struct FeedbackPair {
  std::string name;
  std::function<Vec(const Vec&)> kappa_c;
  std::function<Vec(const Vec&)> kappa_d;
};

// Hybrid system with inputs and disturbances. Flow data lives on stacked
// vectors (x, u_c, w_c), jump data on (x, u_d, w_d); input and
// disturbance boxes bound each channel.
struct HybridSystemUW {
  std::string name;
  int n = 0;
  int m_c = 0, m_d = 0;
  int d_c = 0, d_d = 0;

  ConstraintSet C;  // over (x, u_c, w_c)
  ConstraintSet D;  // over (x, u_d, w_d)
  ParamSetValuedMap F;
  ParamSetValuedMap G;
  Box U_c, U_d, W_c, W_d;

  // Optional analytic state projections and feasibility maps; when absent
  // the generic scan-based fallbacks are used.
  std::optional<ConstraintSet> Pi_c_decl, Pi_d_decl;
  std::function<IntervalSet(const Vec&)> psi_c_decl, psi_d_decl;
  std::function<IntervalSet(const Vec&, const Vec&)> phi_c_decl, phi_d_decl;
  std::function<IntervalSet(const Vec&)> theta_d_decl;

  // Bounding box in state space that contains every region this system is
  // verified or simulated over.
  Box state_box;

  Vec stack_flow(const Vec& x, const Vec& u, const Vec& w) const;
  Vec stack_jump(const Vec& x, const Vec& u, const Vec& w) const;
  void check_shape() const;  // throws on inconsistent dimensions
};

// Closed-loop system: inputs eliminated through a feedback pair. Flow
// data lives on (x, w_c), jump data on (x, w_d).
struct HybridSystemW {
  std::string name;
  int n = 0;
  int d_c = 0, d_d = 0;

  ConstraintSet C;  // over (x, w_c)
  ConstraintSet D;  // over (x, w_d)
  ParamSetValuedMap F;  // f(x, unused, w_c, p)
  ParamSetValuedMap G;
  Box W_c, W_d;

  std::optional<ConstraintSet> Pi_c_decl, Pi_d_decl;
  Box state_box;

  Vec stack_flow(const Vec& x, const Vec& w) const;
  Vec stack_jump(const Vec& x, const Vec& w) const;
};

// Substitutes u_c = kappa_c(x), u_d = kappa_d(x) into every piece of the
// data; membership in the result is equivalent to membership of the
// substituted triple in the original sets, clause by clause.
HybridSystemW close_loop(const HybridSystemUW& sys, const FeedbackPair& fb);

// State projection of the flow or jump constraint set. Uses the declared
// projection when present; otherwise requires every constraint to be
// state-only and rewraps it (throws when an input- or disturbance-
// dependent constraint makes the projection ambiguous).
ConstraintSet project_states(const HybridSystemUW& sys, Phase phase);
ConstraintSet project_states(const HybridSystemW& sys, Phase phase);

// Feasible input set at x: scalar inputs give genuine intervals; systems
// with no input channel report {0} when some admissible disturbance makes
// the state feasible and the empty set otherwise.
IntervalSet psi_u(const HybridSystemUW& sys, const Vec& x, Phase phase);

// Feasible disturbance set at (x, u), same conventions.
IntervalSet phi_w(const HybridSystemUW& sys, const Vec& x, const Vec& u,
                  Phase phase);

}  // namespace invhyb
