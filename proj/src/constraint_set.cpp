#include "invhyb/constraint_set.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace invhyb {

int ConstraintSet::first_clause(const Vec& z) const {
  for (size_t c = 0; c < clauses.size(); ++c) {
    bool ok = true;
    for (const auto& con : clauses[c].cons) {
      if (con.h(z) > constraint_tol(con)) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<int>(c);
  }
  return -1;
}

std::vector<int> ConstraintSet::satisfied_clauses(const Vec& z) const {
  std::vector<int> out;
  for (size_t c = 0; c < clauses.size(); ++c) {
    bool ok = true;
    for (const auto& con : clauses[c].cons) {
      if (con.h(z) > constraint_tol(con)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<int>(c));
  }
  return out;
}

double ConstraintSet::residual(const Vec& z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& clause : clauses) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& con : clause.cons) worst = std::max(worst, con.h(z));
    if (clause.cons.empty()) worst = 0.0;
    best = std::min(best, worst);
  }
  return best;
}

ScalarConstraint le_constraint(std::string name,
                               std::function<double(const Vec&)> h,
                               std::function<Vec(const Vec&)> grad,
                               double scale, bool x_only) {
  ScalarConstraint c;
  c.name = std::move(name);
  c.h = std::move(h);
  c.grad = std::move(grad);
  c.scale = scale;
  c.x_only = x_only;
  return c;
}

std::vector<ScalarConstraint> eq_constraint(
    const std::string& name, std::function<double(const Vec&)> h,
    std::function<Vec(const Vec&)> grad, double scale, bool x_only) {
  ScalarConstraint pos = le_constraint(name + "<=0", h, grad, scale, x_only);
  ScalarConstraint neg = le_constraint(
      name + ">=0", [h](const Vec& z) { return -h(z); },
      grad ? std::function<Vec(const Vec&)>(
                 [grad](const Vec& z) { return Vec(-grad(z)); })
           : std::function<Vec(const Vec&)>(),
      scale, x_only);
  return {pos, neg};
}

ConstraintSet to_constraint_set(const SublevelSet& s, int dim,
                                const std::string& name) {
  ConstraintSet set;
  set.dim = dim;
  Clause cl;
  cl.name = name;
  const double r = s.r;
  cl.cons.push_back(le_constraint(
      name, [V = s.V, r](const Vec& z) { return V(z) - r; }, s.grad, s.scale));
  set.clauses.push_back(std::move(cl));
  return set;
}

ConstraintSet intersect(const ConstraintSet& a, const ConstraintSet& b) {
  ConstraintSet out;
  out.dim = a.dim;
  out.membership_tol = std::min(a.membership_tol, b.membership_tol);
  for (const auto& ca : a.clauses) {
    for (const auto& cb : b.clauses) {
      Clause cl;
      cl.name = ca.name.empty() || cb.name.empty() ? ca.name + cb.name
                                                   : ca.name + "&" + cb.name;
      cl.cons = ca.cons;
      cl.cons.insert(cl.cons.end(), cb.cons.begin(), cb.cons.end());
      out.clauses.push_back(std::move(cl));
    }
  }
  return out;
}

bool tangent_halfspace_test(const ConstraintSet& set, const Vec& z,
                            const Vec& v, double tol) {
  const double vnorm = v.norm();
  if (vnorm == 0.0) return true;
  bool member = false;
  for (const auto& clause : set.clauses) {
    bool satisfied = true;
    for (const auto& con : clause.cons) {
      if (con.h(z) > set.constraint_tol(con)) {
        satisfied = false;
        break;
      }
    }
    if (!satisfied) continue;
    member = true;
    bool all_ok = true;
    for (const auto& con : clause.cons) {
      const double hv = con.h(z);
      const double band = set.constraint_tol(con);
      const bool active = std::abs(hv) <= band;
      if (!active) continue;
      if (!con.grad)
        throw std::runtime_error("tangent test needs a gradient for active "
                                 "constraint '" + con.name + "'");
      const Vec g = con.grad(z);
      const double gnorm = g.norm();
      if (gnorm <= tol)
        throw std::runtime_error("nonsmooth corner unsupported: active "
                                 "constraint '" + con.name +
                                 "' has vanishing gradient");
      if (g.dot(v) > tol * gnorm * vnorm) {
        all_ok = false;
        break;
      }
    }
    if (all_ok) return true;
  }
  if (!member)
    throw std::runtime_error("tangent test requires a point of the set");
  return false;
}

std::string to_string(SampleMode m) {
  switch (m) {
    case SampleMode::Interior: return "interior";
    case SampleMode::Boundary: return "boundary";
    case SampleMode::BoxGrid: return "box-grid";
  }
  return "unknown";
}

SampleGrid sample(const ConstraintSet& set, const Box& box, double resolution,
                  SampleMode mode, double boundary_band) {
  if (resolution <= 0.0) throw std::invalid_argument("resolution must be > 0");
  SampleGrid grid;
  grid.mode = mode;
  grid.resolution = resolution;
  const int d = box.dim();
  if (d == 0) return grid;

  std::vector<int> counts(d);
  for (int i = 0; i < d; ++i) {
    const double w = box.iv[i].hi - box.iv[i].lo;
    counts[i] = std::max(0, static_cast<int>(std::floor(w / resolution + 1e-12))) + 1;
  }

  std::vector<int> idx(d, 0);
  while (true) {
    Vec z(d);
    for (int i = 0; i < d; ++i)
      z[i] = box.iv[i].lo + idx[i] * resolution;
    bool keep = false;
    switch (mode) {
      case SampleMode::BoxGrid:
        keep = true;
        break;
      case SampleMode::Interior:
        keep = set.contains(z);
        break;
      case SampleMode::Boundary: {
        if (set.contains(z)) {
          for (const auto& clause : set.clauses) {
            bool satisfied = true;
            for (const auto& con : clause.cons)
              if (con.h(z) > set.constraint_tol(con)) { satisfied = false; break; }
            if (!satisfied) continue;
            for (const auto& con : clause.cons) {
              if (std::abs(con.h(z)) <= boundary_band * (1.0 + std::abs(con.scale))) {
                keep = true;
                break;
              }
            }
            if (keep) break;
          }
        }
        break;
      }
    }
    if (keep) grid.points.push_back(std::move(z));

    int axis = d - 1;
    while (axis >= 0) {
      if (++idx[axis] < counts[axis]) break;
      idx[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return grid;
}

Curve segment_curve(const Vec& from, const Vec& to) {
  Curve c;
  c.a = 0.0;
  c.b = (to - from).norm();
  if (c.b == 0.0) c.b = 1.0;
  const Vec dir = (to - from) / c.b;
  c.at = [from, to, dir, len = c.b](double t) -> Vec {
    if (t >= len) return to;  // exact far endpoint
    return from + t * dir;
  };
  return c;
}

std::vector<Vec> sample_curves(const std::vector<Curve>& curves,
                               double resolution) {
  if (resolution <= 0.0) throw std::invalid_argument("resolution must be > 0");
  std::vector<Vec> out;
  for (const auto& c : curves) {
    const double len = c.b - c.a;
    const int steps = std::max(1, static_cast<int>(std::ceil(len / resolution - 1e-12)));
    for (int i = 0; i <= steps; ++i) {
      const double t = i == steps ? c.b : c.a + i * (len / steps);
      out.push_back(c.at(t));
    }
  }
  return out;
}

}  // namespace invhyb
