#pragma once

#include "invhyb/types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace invhyb {

// One smooth scalar inequality h(z) <= 0 with an analytic gradient.
// scale feeds the relative membership tolerance; x_only marks constraints
// that depend on the state block alone, which is what state projection of
// a combined (x,u,w) set relies on.
struct ScalarConstraint {
  std::string name;
  std::function<double(const Vec&)> h;
  std::function<Vec(const Vec&)> grad;
  double scale = 1.0;
  bool x_only = true;
  bool w_free = true;  // does not read the disturbance block
};

struct Clause {
  std::string name;
  std::vector<ScalarConstraint> cons;
};

// Closed set in disjunctive normal form: union over clauses of
// intersections of sublevel sets. Equalities are encoded as two opposing
// inequalities by the helpers below.
class ConstraintSet {
 public:
  int dim = 0;
  std::vector<Clause> clauses;
  double membership_tol = 1e-9;

  double constraint_tol(const ScalarConstraint& c) const {
    return membership_tol * (1.0 + std::abs(c.scale));
  }

  bool contains(const Vec& z) const { return first_clause(z) >= 0; }

  // Index of the first satisfied clause, -1 if none.
  int first_clause(const Vec& z) const;

  // All satisfied clauses (jump-map dispatch uses this).
  std::vector<int> satisfied_clauses(const Vec& z) const;

  // min over clauses of max over constraints of h_i(z); <= 0 up to
  // tolerance exactly when z is a member. Used for violation reports and
  // event localization.
  double residual(const Vec& z) const;

  bool empty_syntax() const { return clauses.empty(); }
};

ScalarConstraint le_constraint(std::string name,
                               std::function<double(const Vec&)> h,
                               std::function<Vec(const Vec&)> grad,
                               double scale = 1.0, bool x_only = true);

// h(z) == 0 as a pair {h <= 0, -h <= 0}.
std::vector<ScalarConstraint> eq_constraint(
    const std::string& name, std::function<double(const Vec&)> h,
    std::function<Vec(const Vec&)> grad, double scale = 1.0,
    bool x_only = true);

// Sublevel set {z : V(z) <= r} of a smooth function.
struct SublevelSet {
  std::function<double(const Vec&)> V;
  std::function<Vec(const Vec&)> grad;
  double r = 0.0;
  double scale = 1.0;

  bool contains(const Vec& z, double tol = 1e-9) const {
    return V(z) - r <= tol * (1.0 + std::abs(scale));
  }
  double residual(const Vec& z) const { return V(z) - r; }
};

ConstraintSet to_constraint_set(const SublevelSet& s, int dim,
                                const std::string& name = "sublevel");

// Intersection as DNF product of clause lists.
ConstraintSet intersect(const ConstraintSet& a, const ConstraintSet& b);

// Tangent cone membership test for direction v at a point z of the set:
// for some satisfied clause, every active constraint must satisfy
// <grad h_i(z), v> <= tol * ||grad h_i|| * ||v||. Interior points accept
// every direction. Throws if an active constraint has a vanishing
// gradient (nonsmooth corner the half-space model cannot represent).
bool tangent_halfspace_test(const ConstraintSet& set, const Vec& z,
                            const Vec& v, double tol = 1e-9);

enum class SampleMode { Interior, Boundary, BoxGrid };

std::string to_string(SampleMode m);

struct SampleGrid {
  std::vector<Vec> points;
  SampleMode mode = SampleMode::Interior;
  double resolution = 0.0;
};

// Deterministic lattice sampler over a bounding box. Interior keeps
// members, Boundary keeps members with at least one near-active
// constraint (band is in units of each constraint's own tolerance scale),
// BoxGrid keeps the whole lattice. Lattice points are generated as
// lo + i * resolution per axis, ordered lexicographically by index.
SampleGrid sample(const ConstraintSet& set, const Box& box, double resolution,
                  SampleMode mode, double boundary_band = 1e-6);

// Parametric curve used to sample measure-zero pieces (segments, circle
// arcs) with exact endpoints; t runs over [a, b] inclusive.
struct Curve {
  std::function<Vec(double)> at;
  double a = 0.0;
  double b = 1.0;
};

Curve segment_curve(const Vec& from, const Vec& to);

// Points along the curves with parameter step chosen so consecutive
// points are at most `resolution` apart in parameter scale; both ends
// always included.
std::vector<Vec> sample_curves(const std::vector<Curve>& curves,
                               double resolution);

}  // namespace invhyb
