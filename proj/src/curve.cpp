#include "ramrec/curve.hpp"

#include <algorithm>
#include <numeric>

namespace ramrec {

SpectralCurve swapped(const SpectralCurve& c) {
  SpectralCurve s = c;
  std::swap(s.x, s.y);
  return s;
}

long default_truncation_order(int g_max, int n_max, int k_max) {
  return 6L * (2 * g_max + n_max) + 4L * k_max + 8;
}

namespace {

FieldSeries embed_series(const FieldSeries& s, unsigned n) {
  std::vector<FieldElement> c;
  c.reserve(s.span());
  for (long e = s.val(); e < s.val() + static_cast<long>(s.span()); ++e)
    c.push_back(s.coeff(e).embedded(n));
  return FieldSeries::from_coeffs(s.val(), std::move(c), s.order());
}

// 1/t as a rational function of t, for the chart at infinity.
RationalFunction chart_flip() {
  return RationalFunction::one() / RationalFunction::variable(kVarT);
}

// Minimal t-exponent across the terms of p (p nonzero).
unsigned min_exponent(const MultiPoly& p) {
  if (p.is_constant() || p.is_zero()) return 0;
  unsigned m = ~0u;
  for (const auto& [e, c] : p.terms()) m = std::min(m, e[0]);
  return m;
}

struct Candidate {
  bool at_infinity;
  FieldElement location;
  int index;
};

// Checks the non-coincidence assumption at an admitted ramification point:
// y must be unramified there (finite with dy != 0, or a simple pole).
void check_y_condition(const RationalFunction& y, const FieldElement& a,
                       const std::string& label) {
  int pole_ord = y.den().is_constant() ? 0 : vanishing_order(y.den(), a);
  if (pole_ord >= 2)
    fail(ErrorKind::CoincidentRamification,
         "y has a pole of order " + std::to_string(pole_ord) +
             " at the ramification point t = " + label);
  if (pole_ord == 1) return;  // simple pole: y is unramified here
  RationalFunction dy = y.derivative(kVarT);
  if (dy.is_zero() || vanishing_order(dy.num(), a) > 0)
    fail(ErrorKind::CoincidentRamification,
         "dy vanishes at the ramification point t = " + label);
}

// Exact power-series expansion of univariate p at t = a + s.
FieldSeries shift_poly(const MultiPoly& p, const FieldElement& a) {
  if (p.is_zero()) return FieldSeries::exact_zero();
  if (p.is_constant()) return FieldSeries::monomial(p.constant_value(), 0);
  std::vector<MultiPoly> cs = p.coefficients_in(p.vars()[0]);
  // Horner: ((c_{n-1})(a+s) + c_{n-2})(a+s) + ... keeping dense coefficients.
  std::vector<FieldElement> acc;
  for (size_t i = cs.size(); i-- > 0;) {
    std::vector<FieldElement> next(acc.size() + 1, FieldElement::zero());
    for (size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j] * a;
      next[j + 1] += acc[j];
    }
    if (!cs[i].is_zero()) next[0] += cs[i].constant_value();
    acc = std::move(next);
  }
  return FieldSeries::from_coeffs(0, std::move(acc), kExactOrder);
}

}  // namespace

namespace {

// Rebuilds s with its knowledge bound set to `order` (the Newton candidates
// below carry definite coefficients whose validity is certified separately).
FieldSeries declare_order(const FieldSeries& s, long order) {
  std::vector<FieldElement> c;
  for (long e = s.val(); e < s.val() + static_cast<long>(s.span()) && e <= order; ++e)
    c.push_back(s.coeff(e));
  return FieldSeries::from_coeffs(s.known_zero() ? order + 1 : s.val(), std::move(c), order);
}

}  // namespace

FieldSeries solve_deck(const FieldSeries& x_local, int k, unsigned conductor, int j,
                       long order) {
  // X = x_local - x_local(0) has valuation exactly k.
  FieldSeries X = x_local - FieldSeries::monomial(x_local.coeff(0), 0);
  if (X.known_zero() || X.val() != k)
    fail(ErrorKind::DeckSolveFailure,
         "local expansion of x does not vanish to the expected order " + std::to_string(k));
  FieldSeries Xd = X.derivative();
  FieldElement zeta =
      FieldElement::root_of_unity(conductor, static_cast<long>(j) *
                                                 static_cast<long>(conductor / k));
  // Solve beyond the requested order so the final composition check certifies
  // every returned coefficient (an error at exponent r shows up at k-1+r).
  const long solve_order = order + k;
  FieldSeries theta = FieldSeries::monomial(zeta, 1);
  long correct = 1;
  int guard = 0;
  while (correct < solve_order) {
    if (++guard > 80) fail(ErrorKind::DeckSolveFailure, "deck iteration did not converge");
    long target = std::min(solve_order, 2 * correct);
    long cap = k - 1 + target + 1;
    FieldSeries E = FieldSeries::compose(X, theta, cap) - X.truncated(cap);
    if (E.known_zero()) {
      correct = target;
      continue;
    }
    FieldSeries D = FieldSeries::compose(Xd, theta, cap);
    if (D.known_zero() || D.val() != k - 1)
      fail(ErrorKind::DeckSolveFailure, "degenerate linear step in deck solve");
    FieldSeries delta = E.divided_by(D);
    if (delta.known_zero()) {
      correct = target;
      continue;
    }
    if (delta.val() <= correct)
      fail(ErrorKind::DeckSolveFailure, "deck iteration makes no progress");
    theta = theta - delta;
    if (!theta.is_exact()) theta = declare_order(theta, solve_order);
    theta = theta.truncated(solve_order);
    // One corrected step doubles the number of valid coefficients.
    correct = target;
  }
  // Deck property: the residual window reaches k-1+order and pins every
  // returned coefficient through `order`.
  FieldSeries resid =
      FieldSeries::compose(X, theta, k + solve_order) - X.truncated(k + solve_order);
  if (!resid.known_zero())
    fail(ErrorKind::DeckSolveFailure, "deck verification failed: x o theta != x");
  return theta.truncated(order);
}

CurveAnalysis analyze_curve(const SpectralCurve& curve, int g_max, int n_max) {
  CurveAnalysis A;
  A.curve = curve;
  const RationalFunction& x = curve.x;
  const RationalFunction& y = curve.y;
  if (x.depends_on(kVarT) == false || x.derivative(kVarT).is_zero())
    fail(ErrorKind::ValidationError, "x must be a non-constant function of t");
  auto only_t = [](const RationalFunction& f, const char* name) {
    for (const MultiPoly* p : {&f.num(), &f.den()})
      for (VarId v : p->vars())
        if (v != kVarT)
          fail(ErrorKind::ValidationError, std::string(name) + " may only involve t");
  };
  only_t(x, "x");
  only_t(y, "y");

  RationalFunction dx = x.derivative(kVarT);
  RationalFunction x_inf = x.substituted(kVarT, chart_flip());
  RationalFunction y_inf = y.substituted(kVarT, chart_flip());

  // Conductor bootstrap: the session conductor is the lcm of the ramification
  // indices, and locating roots of the form r*zeta_N^j needs the conductor,
  // so iterate to the fixed point (the root set only grows).
  unsigned conductor = 1;
  std::vector<Candidate> cands;
  RootReport report;
  for (int round = 0; round < 10; ++round) {
    cands.clear();
    report = rational_roots(dx.num(), conductor);
    for (const auto& [root, mult] : report.roots)
      cands.push_back({false, root, mult + 1});
    // Chart at infinity: admitted only when x is finite there.
    bool x_finite_at_inf =
        x_inf.den().is_constant() || vanishing_order(x_inf.den(), FieldElement::zero()) == 0;
    if (x_finite_at_inf) {
      RationalFunction dx_inf = x_inf.derivative(kVarT);
      if (!dx_inf.is_zero()) {
        unsigned m = min_exponent(dx_inf.num());
        if (m >= 1) cands.push_back({true, FieldElement::zero(), static_cast<int>(m) + 1});
      }
    }
    unsigned next = 1;
    for (const auto& c : cands) next = std::lcm(next, static_cast<unsigned>(c.index));
    if (next == conductor) break;
    conductor = std::lcm(conductor, next);
  }

  if (report.remainder_degree > 0)
    fail(ErrorKind::UnsupportedAlgebraicLocus,
         "dx has zeros outside Q and rational multiples of roots of unity; "
         "remainder factor " +
             report.remainder.to_string() + " of degree " +
             std::to_string(report.remainder_degree));
  if (cands.empty())
    fail(ErrorKind::NoRamification, "x has no ramification point");

  // Non-coincidence assumption at every admitted point.
  for (const auto& c : cands) {
    if (c.at_infinity)
      check_y_condition(y_inf, FieldElement::zero(), "inf");
    else
      check_y_condition(y, c.location, c.location.to_string());
  }

  int k_max = 0;
  for (const auto& c : cands) k_max = std::max(k_max, c.index);
  A.conductor = conductor;
  A.work_order = curve.truncation_order > 0
                     ? curve.truncation_order
                     : default_truncation_order(g_max, n_max, k_max);
  const long O = A.work_order;

  // Base-point sanity: must not sit on a ramification point.
  if (curve.base_point) {
    FieldElement o = FieldElement::from_rational(*curve.base_point);
    for (const auto& c : cands)
      if (!c.at_infinity && c.location == o)
        fail(ErrorKind::ValidationError, "base point coincides with a ramification point");
  }

  // Excluded loci: poles of x where x ramifies as a map (the recursion takes
  // residues only at zeros of dx with x finite).
  if (!x.den().is_constant()) {
    RootReport poles = rational_roots(x.den(), conductor);
    for (const auto& [root, mult] : poles.roots)
      if (mult >= 2)
        A.warnings.push_back("excluded locus: pole of x of order " + std::to_string(mult) +
                             " at t = " + root.to_string());
    if (poles.remainder_degree > 0)
      A.warnings.push_back("excluded locus: unlocated pole factor of x: " +
                           poles.remainder.to_string());
  }
  {
    long pole_inf = static_cast<long>(x.num().degree(kVarT)) -
                    static_cast<long>(x.den().degree(kVarT));
    if (pole_inf >= 2)
      A.warnings.push_back("excluded locus: pole of x of order " + std::to_string(pole_inf) +
                           " at t = inf");
  }

  // Deterministic point order: finite points by field order, then infinity.
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.at_infinity != b.at_infinity) return !a.at_infinity;
    if (a.at_infinity) return false;
    return a.location.cmp(b.location) < 0;
  });

  for (const auto& c : cands) {
    RamPoint pt;
    pt.at_infinity = c.at_infinity;
    pt.location = c.location.embedded(conductor);
    pt.index = c.index;
    const int k = c.index;
    // The deck solve certifies coefficients through its composition window,
    // which costs one extra index worth of local x knowledge.
    const long cap_local = O + 2 * k + 6;

    if (!pt.at_infinity) {
      // Local chart s = t - a.
      FieldSeries num_s = embed_series(shift_poly(x.num(), pt.location), conductor);
      FieldSeries den_s = embed_series(shift_poly(x.den(), pt.location), conductor);
      pt.x_loc = num_s.divided_by(den_s, cap_local);
      FieldSeries base = FieldSeries::from_coeffs(
          0, {pt.location, FieldElement::one().embedded(conductor)}, kExactOrder);
      pt.branch.push_back(base);
      pt.branch_d.push_back(FieldSeries::monomial(FieldElement::one().embedded(conductor), 0));
    } else {
      // Chart s = 1/t.
      FieldSeries num_s = embed_series(shift_poly(x_inf.num(), FieldElement::zero()), conductor);
      FieldSeries den_s = embed_series(shift_poly(x_inf.den(), FieldElement::zero()), conductor);
      pt.x_loc = num_s.divided_by(den_s, cap_local);
      pt.branch.push_back(FieldSeries::monomial(FieldElement::one().embedded(conductor), -1));
      pt.branch_d.push_back(
          FieldSeries::monomial(-FieldElement::one().embedded(conductor), -2));
    }
    pt.dx_loc = pt.x_loc.derivative();

    for (int j = 1; j < k; ++j) {
      FieldSeries theta = solve_deck(pt.x_loc, k, conductor, j, O);
      pt.decks.push_back(theta);
      if (!pt.at_infinity) {
        pt.branch.push_back(theta + FieldSeries::monomial(pt.location, 0));
      } else {
        pt.branch.push_back(theta.inverted(O));
      }
      pt.branch_d.push_back(pt.branch.back().derivative());
    }

    for (int i = 0; i < k; ++i) {
      std::map<VarId, FieldSeries> assign;
      if (!pt.at_infinity) {
        assign.emplace(kVarT, pt.branch[static_cast<size_t>(i)]);
        pt.y_branch.push_back(substitute_series_full(y, assign, cap_local));
      } else {
        // In the u-chart, y along branch i is y_inf(theta_i(u)).
        FieldSeries arg = i == 0 ? FieldSeries::identity() : pt.decks[static_cast<size_t>(i - 1)];
        assign.emplace(kVarT, arg);
        pt.y_branch.push_back(substitute_series_full(y_inf, assign, cap_local));
      }
    }
    pt.y_loc = pt.y_branch[0];

    FieldSeries ydx = pt.y_loc * pt.dx_loc;
    if (!ydx.known_zero() && ydx.val() < 0)
      fail(ErrorKind::InternalError,
           "y dx has a pole at the ramification point " + pt.label());
    pt.phi = ydx.integrated();
    A.points.push_back(std::move(pt));
  }
  return A;
}

}  // namespace ramrec
