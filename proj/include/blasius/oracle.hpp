#pragma once

#include <string>
#include <vector>

#include "blasius/quasi_solution.hpp"

namespace blasius {

// Non-rigorous high-accuracy reference solver for F''' + F F'' = 0,
// F(0) = alpha, F'(0) = gamma, F''(0) = 1. Adaptive Taylor-series method:
// the equation is polynomial, so the local series coefficients follow a
// convolution recurrence; steps are accepted by step-doubling comparison.
// Used only for validation; certification never consumes its output.
class OracleTrajectory {
public:
  struct Step {
    double x0;
    double h;
    std::vector<double> coef;  // local Taylor coefficients of F
  };

  double alpha = 0.0;
  double gamma = 0.0;
  double tol = 1e-13;
  int order = 20;
  double x_end = 0.0;
  double a_inf = 0.0;  // F'(x_end)

  const std::vector<Step>& steps() const { return steps_; }

  struct Values {
    double F, dF, ddF;
  };
  Values eval(double x) const;

  // max over accepted steps of |log F''(x_{k+1}) - log F''(x_k) + int F dx|
  double conservation_defect() const;

  void dump_csv(const std::string& path, int samples_per_step = 4) const;

  friend OracleTrajectory integrate(double alpha, double gamma, double x_max, double tol);

private:
  std::vector<Step> steps_;
};

OracleTrajectory integrate(double alpha, double gamma, double x_max, double tol);

// Constants (a, b, c) fitted non-rigorously from a trajectory: a and b from
// the linear tail, c from the second-derivative match near the crossover.
// This is the validation-side stand-in for the true matching triple (the
// continuity-enforcing fixed point differs from it at the size of the inner
// error, which would swamp the exponentially small far-field bounds).
MatchTriple fit_triple_from_oracle(const OracleTrajectory& traj);

// Deviation of the full quasi-solution (inner polynomial + outer
// representation with the fitted triple) from the oracle trajectory.
struct DeviationReport {
  double inner_max_F = 0.0, inner_max_dF = 0.0, inner_max_ddF = 0.0;
  // weighted far-field deviations over the window where the bound exceeds
  // solver noise (t <= 3)
  double far_max_normE = 0.0, far_max_normdE = 0.0, far_max_normddE = 0.0;
  // bound values the above are checked against
  double inner_bound_F = 0.0, inner_bound_dF = 0.0, inner_bound_ddF = 0.0;
  double far_bound_E = 0.0, far_bound_dE = 0.0, far_bound_ddE = 0.0;
  double oracle_allowance = 0.0;  // base noise floor; far checks scale it by (1 + x)
  int violations = 0;
  int samples_inner = 0;
  int samples_far = 0;
  MatchTriple fitted{Enclosure(1.0), Enclosure(-1.0), Enclosure(0.0), Rational(0)};
};
DeviationReport compare(const OracleTrajectory& traj, const InnerQuasi& inner,
                        const MatchTriple& matched_triple, double inner_bound_F,
                        double inner_bound_dF, double inner_bound_ddF, double far_bound_E,
                        double far_bound_dE, double far_bound_ddE, int inner_samples = 500,
                        int far_samples = 200, double far_x_max = 8.0);

}  // namespace blasius
