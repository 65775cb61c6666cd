#pragma once

#include "invhyb/hybrid_time.hpp"
#include "invhyb/system.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace invhyb {

struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Priority { JumpFirst, FlowFirst };

std::string to_string(Priority p);

enum class WPolicy { Constant, UniformPerJump, UniformPerInterval };

struct ChannelPolicy {
  WPolicy kind = WPolicy::UniformPerInterval;
  double value = 0.0;  // only for Constant
};

// Per-channel disturbance policies; empty vectors mean "uniform over the
// box" for every channel. Flow channels are redrawn at jumps under either
// uniform policy (intervals are delimited by jumps).
struct DisturbancePolicy {
  std::vector<ChannelPolicy> wc, wd;
};

struct FlowSelector {
  int selection = 0;
  std::optional<Vec> param;  // defaults to the parameter box midpoint
};

struct JumpSelector {
  bool seeded_random = false;
  int index = 0;  // position among the selections offered for the clause
};

struct SimConfig {
  double horizon_T = 10.0;
  int horizon_J = 1000;
  double step_init = 1e-3;
  double step_max = 1e-2;
  double step_min = 1e-9;
  double event_tol = 1e-12;  // relative width of the event bracket
  Priority priority = Priority::JumpFirst;
  std::uint64_t seed = 0;
  DisturbancePolicy policy;
  FlowSelector flow_sel;
  JumpSelector jump_sel;
  double tol = 1e-9;  // set-membership tolerance

  void validate() const;  // throws std::invalid_argument
};

// Simulates the closed loop from x0 until the hybrid horizon (T, J) or a
// genuine termination. Deterministic: two calls with equal inputs produce
// bit-identical solution pairs.
SolutionPair simulate(const HybridSystemW& sys, const Vec& x0,
                      const SimConfig& cfg);

// Why a solution that stopped at x cannot be continued (Complete means it
// can). budget_exhausted forces HorizonReached. wc is the flow
// disturbance in effect for continuation tests.
TerminationReason classify_termination(const HybridSystemW& sys, const Vec& x,
                                       Phase last_phase, bool budget_exhausted,
                                       const Vec& wc, const SimConfig& cfg);

struct InvarianceReport {
  bool ok = true;
  double worst_violation = -std::numeric_limits<double>::infinity();
  HybridTime where;
};

InvarianceReport check_invariance(const SolutionPair& sol,
                                  const ConstraintSet& target,
                                  double tol = 1e-9);
InvarianceReport check_invariance(const SolutionPair& sol,
                                  const SublevelSet& target,
                                  double tol = 1e-9);

// Jumps per jump-set clause name.
std::map<std::string, int> impact_counts(const SolutionPair& sol);

}  // namespace invhyb
