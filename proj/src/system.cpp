#include "invhyb/system.hpp"

#include <cmath>
#include <stdexcept>

namespace invhyb {

namespace {

Vec stack3(const Vec& x, const Vec& u, const Vec& w) {
  Vec z(x.size() + u.size() + w.size());
  z << x, u, w;
  return z;
}

Vec empty_vec() { return Vec(0); }

}  // namespace

std::vector<int> ParamSetValuedMap::selection_indices(int clause) const {
  std::vector<int> out;
  for (size_t s = 0; s < selections.size(); ++s)
    if (clause < 0 || selections[s].clause < 0 || selections[s].clause == clause)
      out.push_back(static_cast<int>(s));
  return out;
}

std::vector<Vec> ParamSetValuedMap::values(const Vec& x, const Vec& u,
                                           const Vec& w, int clause) const {
  std::vector<Vec> out;
  const auto idx = selection_indices(clause);
  const auto verts = params.vertices();
  out.reserve(idx.size() * verts.size());
  for (int s : idx)
    for (const auto& p : verts) out.push_back(selections[s].f(x, u, w, p));
  return out;
}

Vec HybridSystemUW::stack_flow(const Vec& x, const Vec& u, const Vec& w) const {
  return stack3(x, u, w);
}

Vec HybridSystemUW::stack_jump(const Vec& x, const Vec& u, const Vec& w) const {
  return stack3(x, u, w);
}

void HybridSystemUW::check_shape() const {
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("system '" + name + "': " + msg);
  };
  require(n > 0, "state dimension must be positive");
  require(U_c.dim() == m_c, "flow input box dimension mismatch");
  require(U_d.dim() == m_d, "jump input box dimension mismatch");
  require(W_c.dim() == d_c, "flow disturbance box dimension mismatch");
  require(W_d.dim() == d_d, "jump disturbance box dimension mismatch");
  require(C.dim == n + m_c + d_c, "flow set dimension mismatch");
  require(D.dim == n + m_d + d_d, "jump set dimension mismatch");
  require(!F.selections.empty(), "flow map needs at least one selection");
  require(state_box.dim() == n, "state bounding box dimension mismatch");
}

Vec HybridSystemW::stack_flow(const Vec& x, const Vec& w) const {
  return stack3(x, empty_vec(), w);
}

Vec HybridSystemW::stack_jump(const Vec& x, const Vec& w) const {
  return stack3(x, empty_vec(), w);
}

namespace {

ConstraintSet compose_set(const ConstraintSet& set, int n, int d,
                          const std::function<Vec(const Vec&)>& kappa) {
  ConstraintSet out;
  out.dim = n + d;
  out.membership_tol = set.membership_tol;
  for (const auto& clause : set.clauses) {
    Clause cl;
    cl.name = clause.name;
    for (const auto& con : clause.cons) {
      ScalarConstraint c2;
      c2.name = con.name;
      c2.scale = con.scale;
      c2.w_free = con.w_free;
      c2.x_only = con.x_only || con.w_free;
      c2.h = [h = con.h, kappa, n, d](const Vec& xw) {
        const Vec x = xw.head(n);
        const Vec w = xw.tail(d);
        const Vec u = kappa ? kappa(x) : Vec(0);
        Vec z(n + u.size() + d);
        z << x, u, w;
        return h(z);
      };
      if (con.x_only && con.grad) {
        c2.grad = [g = con.grad, kappa, n, d](const Vec& xw) {
          const Vec x = xw.head(n);
          const Vec w = xw.tail(d);
          const Vec u = kappa ? kappa(x) : Vec(0);
          Vec z(n + u.size() + d);
          z << x, u, w;
          const Vec gz = g(z);
          Vec out = Vec::Zero(n + d);
          out.head(n) = gz.head(n);
          return out;
        };
      }
      cl.cons.push_back(std::move(c2));
    }
    out.clauses.push_back(std::move(cl));
  }
  return out;
}

}  // namespace

HybridSystemW close_loop(const HybridSystemUW& sys, const FeedbackPair& fb) {
  sys.check_shape();
  if (sys.m_c > 0 && !fb.kappa_c)
    throw std::invalid_argument("closing the loop on '" + sys.name +
                                "' needs a flow feedback");
  if (sys.m_d > 0 && !fb.kappa_d)
    throw std::invalid_argument("closing the loop on '" + sys.name +
                                "' needs a jump feedback");
  HybridSystemW out;
  out.name = fb.name.empty() ? sys.name : sys.name + "+" + fb.name;
  out.n = sys.n;
  out.d_c = sys.d_c;
  out.d_d = sys.d_d;
  out.W_c = sys.W_c;
  out.W_d = sys.W_d;
  out.state_box = sys.state_box;
  out.Pi_c_decl = sys.Pi_c_decl;
  out.Pi_d_decl = sys.Pi_d_decl;

  const auto kc = sys.m_c > 0 ? fb.kappa_c : std::function<Vec(const Vec&)>();
  const auto kd = sys.m_d > 0 ? fb.kappa_d : std::function<Vec(const Vec&)>();

  out.C = compose_set(sys.C, sys.n, sys.d_c, kc);
  out.D = compose_set(sys.D, sys.n, sys.d_d, kd);

  out.F.params = sys.F.params;
  for (const auto& sel : sys.F.selections) {
    MapSelection s2;
    s2.name = sel.name;
    s2.clause = sel.clause;
    s2.f = [f = sel.f, kc](const Vec& x, const Vec&, const Vec& w,
                           const Vec& p) {
      return f(x, kc ? kc(x) : Vec(0), w, p);
    };
    out.F.selections.push_back(std::move(s2));
  }
  out.G.params = sys.G.params;
  for (const auto& sel : sys.G.selections) {
    MapSelection s2;
    s2.name = sel.name;
    s2.clause = sel.clause;
    s2.f = [f = sel.f, kd](const Vec& x, const Vec&, const Vec& w,
                           const Vec& p) {
      return f(x, kd ? kd(x) : Vec(0), w, p);
    };
    out.G.selections.push_back(std::move(s2));
  }
  return out;
}

namespace {

ConstraintSet project_generic(const ConstraintSet& set, int n,
                              const Vec& pad_tail, const std::string& what) {
  ConstraintSet out;
  out.dim = n;
  out.membership_tol = set.membership_tol;
  for (const auto& clause : set.clauses) {
    Clause cl;
    cl.name = clause.name;
    for (const auto& con : clause.cons) {
      if (!con.x_only)
        throw std::runtime_error(
            "state projection of " + what + " needs a declared projection: "
            "constraint '" + con.name + "' is not state-only");
      ScalarConstraint c2;
      c2.name = con.name;
      c2.scale = con.scale;
      c2.x_only = true;
      c2.h = [h = con.h, pad_tail, n](const Vec& x) {
        Vec z(n + pad_tail.size());
        z << x, pad_tail;
        return h(z);
      };
      if (con.grad) {
        c2.grad = [g = con.grad, pad_tail, n](const Vec& x) {
          Vec z(n + pad_tail.size());
          z << x, pad_tail;
          return Vec(g(z).head(n));
        };
      }
      cl.cons.push_back(std::move(c2));
    }
    out.clauses.push_back(std::move(cl));
  }
  return out;
}

}  // namespace

ConstraintSet project_states(const HybridSystemUW& sys, Phase phase) {
  if (phase == Phase::Flow) {
    if (sys.Pi_c_decl) return *sys.Pi_c_decl;
    Vec pad(sys.m_c + sys.d_c);
    pad << sys.U_c.midpoint(), sys.W_c.midpoint();
    return project_generic(sys.C, sys.n, pad, "the flow set of '" + sys.name + "'");
  }
  if (sys.Pi_d_decl) return *sys.Pi_d_decl;
  Vec pad(sys.m_d + sys.d_d);
  pad << sys.U_d.midpoint(), sys.W_d.midpoint();
  return project_generic(sys.D, sys.n, pad, "the jump set of '" + sys.name + "'");
}

ConstraintSet project_states(const HybridSystemW& sys, Phase phase) {
  if (phase == Phase::Flow) {
    if (sys.Pi_c_decl) return *sys.Pi_c_decl;
    return project_generic(sys.C, sys.n, sys.W_c.midpoint(),
                           "the closed-loop flow set of '" + sys.name + "'");
  }
  if (sys.Pi_d_decl) return *sys.Pi_d_decl;
  return project_generic(sys.D, sys.n, sys.W_d.midpoint(),
                         "the closed-loop jump set of '" + sys.name + "'");
}

namespace {

// Membership of x with the input fixed and the disturbance quantified
// existentially. Scalar disturbance channels are scanned densely; this is
// the fallback path, built-in systems declare exact feasibility maps.
bool exists_w_member(const ConstraintSet& set, const Vec& x, const Vec& u,
                     const Box& W) {
  const int d = W.dim();
  if (d == 0) {
    Vec z(x.size() + u.size());
    z << x, u;
    return set.contains(z);
  }
  if (d == 1) {
    const double lo = W.iv[0].lo, hi = W.iv[0].hi;
    const int steps = hi > lo ? 400 : 0;
    for (int i = 0; i <= steps; ++i) {
      Vec z(x.size() + u.size() + 1);
      const double w = steps == 0 ? lo : lo + (hi - lo) * i / steps;
      z << x, u, w;
      if (set.contains(z)) return true;
    }
    return false;
  }
  throw std::runtime_error(
      "generic disturbance feasibility only handles scalar channels; "
      "declare a feasibility map for this system");
}

IntervalSet scan_interval(const std::function<bool(double)>& member,
                          double lo, double hi) {
  IntervalSet out;
  if (hi < lo) return out;
  if (hi == lo) {
    if (member(lo)) out.parts.push_back({lo, hi});
    return out;
  }
  const int steps = 2000;
  std::vector<bool> in(steps + 1);
  for (int i = 0; i <= steps; ++i)
    in[i] = member(lo + (hi - lo) * i / steps);

  int i = 0;
  while (i <= steps) {
    if (!in[i]) {
      ++i;
      continue;
    }
    int k = i;
    while (k + 1 <= steps && in[k + 1]) ++k;
    double a = lo + (hi - lo) * i / steps;
    double b = lo + (hi - lo) * k / steps;
    if (i > 0) {
      const double prev = lo + (hi - lo) * (i - 1) / steps;
      // member(b)=true at a, false at prev: boundary in between.
      double left = prev, right = a;
      for (int it = 0; it < 60; ++it) {
        const double m = 0.5 * (left + right);
        if (member(m)) right = m; else left = m;
      }
      a = right;
    }
    if (k < steps) {
      const double next = lo + (hi - lo) * (k + 1) / steps;
      double left = b, right = next;
      for (int it = 0; it < 60; ++it) {
        const double m = 0.5 * (left + right);
        if (member(m)) left = m; else right = m;
      }
      b = left;
    }
    out.parts.push_back({a, b});
    i = k + 1;
  }
  out.normalize();
  return out;
}

}  // namespace

IntervalSet psi_u(const HybridSystemUW& sys, const Vec& x, Phase phase) {
  const auto& decl = phase == Phase::Flow ? sys.psi_c_decl : sys.psi_d_decl;
  if (decl) return decl(x);
  const auto& set = phase == Phase::Flow ? sys.C : sys.D;
  const auto& U = phase == Phase::Flow ? sys.U_c : sys.U_d;
  const auto& W = phase == Phase::Flow ? sys.W_c : sys.W_d;
  const int m = U.dim();
  if (m == 0) {
    IntervalSet out;
    if (exists_w_member(set, x, Vec(0), W)) out.parts.push_back({0.0, 0.0});
    return out;
  }
  if (m == 1) {
    return scan_interval(
        [&](double u) {
          Vec uv(1);
          uv[0] = u;
          return exists_w_member(set, x, uv, W);
        },
        U.iv[0].lo, U.iv[0].hi);
  }
  throw std::runtime_error(
      "generic input feasibility only handles scalar inputs; declare a "
      "feasibility map for system '" + sys.name + "'");
}

IntervalSet phi_w(const HybridSystemUW& sys, const Vec& x, const Vec& u,
                  Phase phase) {
  const auto& decl = phase == Phase::Flow ? sys.phi_c_decl : sys.phi_d_decl;
  if (decl) return decl(x, u);
  const auto& set = phase == Phase::Flow ? sys.C : sys.D;
  const auto& W = phase == Phase::Flow ? sys.W_c : sys.W_d;
  const int d = W.dim();
  if (d == 0) {
    IntervalSet out;
    Vec z(x.size() + u.size());
    z << x, u;
    if (set.contains(z)) out.parts.push_back({0.0, 0.0});
    return out;
  }
  if (d == 1) {
    return scan_interval(
        [&](double w) {
          Vec z(x.size() + u.size() + 1);
          z << x, u, w;
          return set.contains(z);
        },
        W.iv[0].lo, W.iv[0].hi);
  }
  throw std::runtime_error(
      "generic disturbance feasibility only handles scalar channels; "
      "declare a feasibility map for system '" + sys.name + "'");
}

}  // namespace invhyb
