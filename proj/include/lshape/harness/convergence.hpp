#pragma once

#include <string>
#include <vector>

#include "lshape/asympt/rate.hpp"
#include "lshape/exact/dims.hpp"

namespace lshape::harness {

/// How s = yN and s + q = xN are turned into integers.
enum class Rounding { kNearest, kFloor };

struct ConvergenceRow {
  int n = 0;
  exact::LshapeDims dims;
  double phi_n = 0;   // -(1/N^2) log F
  double gap = 0;     // phi_n - phi(x, y)
  bool exact_path = true;
};

struct FiniteSizeOptions {
  unsigned precision_bits = 0;  // 0 selects the default for N
  Rounding rounding = Rounding::kNearest;
  int n_max = 256;
  int exact_n_max = 128;  // above this the MPFR path is used
};

exact::LshapeDims scaled_dims(double x, double y, int n, Rounding rounding);

/// -(1/N^2) log F_{r,s,q}(alpha) on the scaled corner; the gap is against
/// the asymptotic phi evaluated in double precision.
ConvergenceRow finite_size_phi(double x, double y, const Rational& alpha, int n,
                               const FiniteSizeOptions& opt = {});

struct ConvergenceScan {
  double x = 0, y = 0;
  Rational alpha;
  std::vector<ConvergenceRow> rows;
  double phi = 0;             // asymptotic value
  double extrapolation = 0;   // phi_inf of phi + c1/N + c2 log N / N^2
  double c1 = 0, c2 = 0;
  double abs_deviation = 0;
  double rel_deviation = 0;   // 0 when phi = 0
  bool gaps_decreasing = false;
  asympt::RegionTag region = asympt::RegionTag::kDI;
};

ConvergenceScan convergence_scan(double x, double y, const Rational& alpha, const std::vector<int>& ns,
                                 const FiniteSizeOptions& opt = {}, int jobs = 1);

struct PrefactorPoint {
  double x = 0, y = 0;
  Rational alpha;
  double extrapolation = 0;
  double phi_unit = 0;        // mapping with prefactor 1
  double phi_one_minus_x2 = 0;  // mapping with prefactor (1-x)^2
  double dev_unit = 0;
  double dev_one_minus_x2 = 0;
  asympt::RatePrefactor winner = asympt::RatePrefactor::kUnit;
};

struct PrefactorAdjudication {
  std::vector<PrefactorPoint> points;
  bool consistent = false;
  asympt::RatePrefactor winner = asympt::RatePrefactor::kUnit;
};

struct AdjudicationPoint {
  double x, y;
  Rational alpha;
};

/// D_II points with yN and xN integral for N in {32, 64, 128}.
std::vector<AdjudicationPoint> default_adjudication_points();

PrefactorAdjudication adjudicate_prefactor(const std::vector<AdjudicationPoint>& points,
                                           const std::vector<int>& ns, int jobs = 1);

}  // namespace lshape::harness
