#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace invhyb {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(double v, double tol = 0.0) const {
    return v >= lo - tol && v <= hi + tol;
  }
  double clamp(double v) const { return v < lo ? lo : (v > hi ? hi : v); }
};

// Axis-aligned box; dimension 0 is legal and means "no coordinates here"
// (systems without an input or disturbance channel use it throughout).
struct Box {
  std::vector<Interval> iv;

  int dim() const { return static_cast<int>(iv.size()); }

  bool contains(const Vec& v, double tol = 0.0) const {
    if (v.size() != dim()) return false;
    for (int i = 0; i < dim(); ++i)
      if (!iv[i].contains(v[i], tol)) return false;
    return true;
  }

  Vec clamp(const Vec& v) const {
    Vec out = v;
    for (int i = 0; i < dim() && i < v.size(); ++i) out[i] = iv[i].clamp(v[i]);
    return out;
  }

  Vec midpoint() const {
    Vec m(dim());
    for (int i = 0; i < dim(); ++i) m[i] = 0.5 * (iv[i].lo + iv[i].hi);
    return m;
  }

  // All 2^dim corner points; a dimension-0 box has exactly one vertex,
  // the empty vector, which is what makes vertex reduction loops uniform.
  std::vector<Vec> vertices() const {
    std::vector<Vec> out;
    const int d = dim();
    const std::uint64_t count = std::uint64_t{1} << d;
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      Vec v(d);
      for (int i = 0; i < d; ++i)
        v[i] = (mask >> i) & 1 ? iv[i].hi : iv[i].lo;
      out.push_back(std::move(v));
    }
    return out;
  }
};

// Finite union of closed intervals on the real line, kept sorted and
// disjoint by normalize(). Used for one-dimensional feasibility sets.
struct IntervalSet {
  std::vector<Interval> parts;

  bool empty() const { return parts.empty(); }

  bool contains(double v, double tol = 0.0) const {
    for (const auto& p : parts)
      if (p.contains(v, tol)) return true;
    return false;
  }

  void normalize(double merge_tol = 0.0) {
    if (parts.empty()) return;
    std::vector<Interval> sorted = parts;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    parts.clear();
    for (const auto& p : sorted) {
      if (p.hi < p.lo) continue;
      if (!parts.empty() && p.lo <= parts.back().hi + merge_tol)
        parts.back().hi = std::max(parts.back().hi, p.hi);
      else
        parts.push_back(p);
    }
  }

  // Point of smallest absolute value; caller must check empty() first.
  double min_abs_point() const {
    if (parts.empty())
      throw std::logic_error("min_abs_point on empty interval set");
    double best = parts.front().clamp(0.0);
    for (const auto& p : parts) {
      const double c = p.clamp(0.0);
      if (std::abs(c) < std::abs(best)) best = c;
    }
    return best;
  }
};

// Deterministic across standard library implementations: mt19937_64 has a
// pinned spec, and the 53-bit scaling below avoids distribution objects,
// whose streams are not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t integer(std::uint64_t bound) {
    // Rejection-free modulo is fine here: bounds are tiny (selection counts).
    return gen_() % bound;
  }

 private:
  std::mt19937_64 gen_;
};

inline std::string format_vec(const Vec& v) {
  std::string s = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace invhyb
