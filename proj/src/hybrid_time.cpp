#include "invhyb/hybrid_time.hpp"

#include <cmath>

namespace invhyb {

namespace {

bool domain_shape_ok(const std::vector<HtdInterval>& iv, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (iv.empty()) return fail("domain has no intervals");
  if (iv.front().j != 0) return fail("first interval must have j = 0");
  if (iv.front().t_start != 0.0) return fail("domain must start at t = 0");
  for (size_t k = 0; k < iv.size(); ++k) {
    if (!(iv[k].t_end >= iv[k].t_start))
      return fail("interval " + std::to_string(k) + " has t_end < t_start");
    if (k + 1 < iv.size()) {
      if (iv[k + 1].j != iv[k].j + 1)
        return fail("jump counter must increase by one at interval " +
                    std::to_string(k + 1));
      if (iv[k + 1].t_start != iv[k].t_end)
        return fail("interval " + std::to_string(k + 1) +
                    " does not start where the previous one ends");
    }
  }
  return true;
}

}  // namespace

bool HybridTimeDomain::valid(std::string* why) const {
  return domain_shape_ok(intervals, why);
}

double HybridTimeDomain::flow_time() const {
  double total = 0.0;
  for (const auto& iv : intervals) total += iv.t_end - iv.t_start;
  return total;
}

int HybridTimeDomain::jump_count() const {
  return intervals.empty() ? 0 : static_cast<int>(intervals.size()) - 1;
}

HybridTimeDomain HybridArc::domain() const {
  HybridTimeDomain d;
  d.intervals.reserve(intervals.size());
  for (const auto& iv : intervals) {
    HtdInterval h;
    h.j = iv.j;
    h.t_start = iv.t.empty() ? 0.0 : iv.t.front();
    h.t_end = iv.t.empty() ? 0.0 : iv.t.back();
    d.intervals.push_back(h);
  }
  return d;
}

int HybridArc::state_dim() const {
  for (const auto& iv : intervals)
    if (!iv.x.empty()) return static_cast<int>(iv.x.front().size());
  return 0;
}

bool HybridArc::valid(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = state_dim();
  for (const auto& iv : intervals) {
    if (iv.t.size() != iv.x.size())
      return fail("interval j=" + std::to_string(iv.j) +
                  " has mismatched time/state sample counts");
    if (iv.t.empty())
      return fail("interval j=" + std::to_string(iv.j) + " has no samples");
    for (size_t k = 0; k + 1 < iv.t.size(); ++k)
      if (!(iv.t[k + 1] >= iv.t[k]))
        return fail("non-monotone sample times in interval j=" +
                    std::to_string(iv.j));
    for (const auto& x : iv.x) {
      if (x.size() != n) return fail("state dimension changes along the arc");
      if (!x.allFinite()) return fail("non-finite state sample");
    }
  }
  return domain().valid(why);
}

HybridTimeDomain DisturbanceSignal::domain() const {
  HybridTimeDomain d;
  d.intervals.reserve(intervals.size());
  for (const auto& iv : intervals) {
    HtdInterval h;
    h.j = iv.j;
    h.t_start = iv.t.empty() ? 0.0 : iv.t.front();
    h.t_end = iv.t.empty() ? 0.0 : iv.t.back();
    d.intervals.push_back(h);
  }
  return d;
}

std::string to_string(TerminationReason r) {
  switch (r) {
    case TerminationReason::Complete: return "Complete";
    case TerminationReason::EndedFlowBoundary: return "EndedFlowBoundary";
    case TerminationReason::EndedFlowNoContinuation:
      return "EndedFlowNoContinuation";
    case TerminationReason::EndedFlowFiniteEscape:
      return "EndedFlowFiniteEscape";
    case TerminationReason::EndedJumpOutside: return "EndedJumpOutside";
    case TerminationReason::EndedJumpNoContinuation:
      return "EndedJumpNoContinuation";
    case TerminationReason::HorizonReached: return "HorizonReached";
  }
  return "Unknown";
}

bool SolutionPair::consistent(std::string* why, double tol) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!arc.valid(why)) return false;
  if (arc.intervals.size() != disturbance.intervals.size())
    return fail("arc and disturbance have different interval counts");
  const size_t jumps_expected = arc.intervals.size() - 1;
  if (disturbance.wd.size() != jumps_expected)
    return fail("need exactly one jump disturbance per jump");
  if (jumps.size() != jumps_expected)
    return fail("need exactly one jump record per jump");
  for (size_t k = 0; k < arc.intervals.size(); ++k) {
    const auto& a = arc.intervals[k];
    const auto& s = disturbance.intervals[k];
    if (s.j != a.j)
      return fail("disturbance interval j mismatch at index " +
                  std::to_string(k));
    if (s.t.size() != a.t.size())
      return fail("disturbance sample count mismatch in interval j=" +
                  std::to_string(a.j));
    for (size_t i = 0; i < s.t.size(); ++i)
      if (std::abs(s.t[i] - a.t[i]) > tol)
        return fail("disturbance sample time mismatch in interval j=" +
                    std::to_string(a.j));
  }
  return true;
}

}  // namespace invhyb
