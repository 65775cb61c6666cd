#pragma once

#include "invhyb/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace invhyb {

struct HybridTime {
  double t = 0.0;
  int j = 0;
};

struct HtdInterval {
  int j = 0;
  double t_start = 0.0;
  double t_end = 0.0;
};

// Ordered flow intervals; consecutive intervals share their boundary time
// and the jump counter increases by exactly one at each boundary.
struct HybridTimeDomain {
  std::vector<HtdInterval> intervals;

  bool valid(std::string* why = nullptr) const;
  double flow_time() const;
  int jump_count() const;
};

struct ArcInterval {
  int j = 0;
  std::vector<double> t;
  std::vector<Vec> x;
};

// Sampled hybrid arc. Every interval carries both endpoint samples, so a
// jump shows up as two samples at the same time with consecutive j.
struct HybridArc {
  std::vector<ArcInterval> intervals;

  HybridTimeDomain domain() const;
  int state_dim() const;
  bool valid(std::string* why = nullptr) const;
};

struct SignalInterval {
  int j = 0;
  std::vector<double> t;
  std::vector<Vec> wc;
};

// Disturbance paired with an arc: flow disturbances sampled on the same
// grid as the arc, one jump disturbance per jump.
struct DisturbanceSignal {
  std::vector<SignalInterval> intervals;
  std::vector<Vec> wd;

  HybridTimeDomain domain() const;
};

enum class TerminationReason {
  Complete,
  EndedFlowBoundary,
  EndedFlowNoContinuation,
  EndedFlowFiniteEscape,
  EndedJumpOutside,
  EndedJumpNoContinuation,
  HorizonReached,
};

std::string to_string(TerminationReason r);

struct JumpRecord {
  double t = 0.0;
  int from_j = 0;
  int clause = -1;
  std::string clause_name;
  int selection = 0;
  Vec wd;
  Vec x_pre;
  Vec x_post;
};

struct SolutionPair {
  HybridArc arc;
  DisturbanceSignal disturbance;
  TerminationReason termination = TerminationReason::HorizonReached;
  std::vector<JumpRecord> jumps;
  std::string diagnostic;

  // Domain agreement between arc and disturbance plus per-interval sample
  // alignment; simulate() output always satisfies this and the CSV reader
  // re-checks it.
  bool consistent(std::string* why = nullptr, double tol = 1e-9) const;
};

}  // namespace invhyb
