#ifndef RAMREC_CURVE_HPP
#define RAMREC_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ramrec/series.hpp"

namespace ramrec {

// Genus-0 spectral curve data: two rational functions of the parameter t.
// base_point: kernel base for the third-kind differential; nullopt = infinity.
struct SpectralCurve {
  RationalFunction x;
  RationalFunction y;
  std::optional<Rational> base_point;
  long truncation_order = 0;  // 0 = derive from the requested targets
};

SpectralCurve swapped(const SpectralCurve& c);

// A ramification point of x together with all of its local series data, in
// the local parameter s (s = t - a at a finite point, s = 1/t at infinity).
struct RamPoint {
  bool at_infinity = false;
  FieldElement location;  // t-coordinate when finite
  int index = 0;          // k >= 2

  // Chart-coordinate deck series theta^{(j)}, j = 1..k-1, each of valuation 1
  // with leading coefficient zeta_k^j.
  std::vector<FieldSeries> decks;
  // t-coordinates of the k colliding branches: branch[0] is the point itself
  // (a + s, or 1/s at infinity), branch[j] follows deck j.
  std::vector<FieldSeries> branch;
  std::vector<FieldSeries> branch_d;  // d branch[i] / ds
  FieldSeries x_loc;                  // x along branch[0]
  FieldSeries dx_loc;                 // d/ds of x_loc
  FieldSeries y_loc;                  // y along branch[0]
  std::vector<FieldSeries> y_branch;  // y along each branch
  FieldSeries phi;                    // primitive of y_loc * dx_loc, constant 0

  std::string label() const { return at_infinity ? "inf" : location.to_string(); }
};

struct CurveAnalysis {
  SpectralCurve curve;
  unsigned conductor = 1;
  long work_order = 0;
  std::vector<RamPoint> points;
  std::vector<std::string> warnings;  // excluded loci (poles of x that ramify)
};

// O = 6*(2*g_max + n_max) + 4*k_max + 8.
long default_truncation_order(int g_max, int n_max, int k_max);

// Validates the curve, finds all ramification points of x in both charts,
// solves the deck transformations and expands the local data. The requested
// targets determine the default truncation order.
CurveAnalysis analyze_curve(const SpectralCurve& curve, int g_max, int n_max);

// The unique series zeta^j*s + c2*s^2 + ... with x_local(theta(s)) = x_local(s)
// through `order`. x_local is x along the chart, as a series of valuation 0.
FieldSeries solve_deck(const FieldSeries& x_local, int k, unsigned conductor, int j,
                       long order);

}  // namespace ramrec

#endif
