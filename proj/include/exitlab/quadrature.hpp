#pragma once

#include <cmath>

#include "exitlab/common.hpp"

namespace exitlab {

// Adaptive Simpson quadrature with a hard interval budget. Failure to reach
// the requested relative tolerance raises QuadratureFailure rather than
// returning a silently degraded value.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-8,
                 long max_intervals = 1 << 22) {
  if (!(a <= b)) throw InvalidParameter("integrate: bad interval");
  if (a == b) return 0.0;

  struct Worker {
    F& f;
    long budget;
    double simpson(double lo, double flo, double hi, double fhi, double fmid) const {
      return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    }
    double refine(double lo, double flo, double mid, double fmid, double hi, double fhi,
                  double whole, double tol, int depth) {
      if (--budget < 0) throw QuadratureFailure("integrate: interval budget exhausted");
      const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
      const double flm = f(lmid), frm = f(rmid);
      const double left = simpson(lo, flo, mid, fmid, flm);
      const double right = simpson(mid, fmid, hi, fhi, frm);
      const double err = left + right - whole;
      if (depth > 0 && std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
      if (depth > 60) throw QuadratureFailure("integrate: recursion limit");
      return refine(lo, flo, lmid, flm, mid, fmid, left, 0.5 * tol, depth + 1) +
             refine(mid, fmid, rmid, frm, hi, fhi, right, 0.5 * tol, depth + 1);
    }
  };

  Worker w{f, max_intervals};
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = w.simpson(a, fa, b, fb, fm);
  const double scale = std::max(std::abs(whole), 1e-300);
  return w.refine(a, fa, 0.5 * (a + b), fm, b, fb, whole, rel_tol * scale, 0);
}

}  // namespace exitlab
