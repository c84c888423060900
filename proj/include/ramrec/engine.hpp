#ifndef RAMREC_ENGINE_HPP
#define RAMREC_ENGINE_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ramrec/curve.hpp"

namespace ramrec {

// W^g_n: the function part w(p0,...,p_{n-1}); the differential factor
// dp0...dp_{n-1} is implicit.
struct Correlator {
  int g = 0;
  int n = 0;
  RationalFunction w;
};

struct SetPartition {
  std::vector<std::vector<int>> blocks;  // disjoint, covering 0..k-1
};
// All set partitions of {0, ..., k-1}, in restricted-growth-string order.
std::vector<SetPartition> set_partitions(int k);

enum class RecursionMode {
  General,                  // subset sum over deck subsets, any index
  SimpleRamificationOnly,   // the classical two-branch recursion; k = 2 only
};

struct CheckReport {
  std::string name;
  bool pass = true;
  std::vector<std::string> details;
  double ms = 0.0;
};

// Memoized tower of correlation functions over one analyzed curve.
class CorrelatorStore {
 public:
  explicit CorrelatorStore(CurveAnalysis analysis,
                           RecursionMode mode = RecursionMode::General);

  const CurveAnalysis& analysis() const { return A_; }
  RecursionMode mode() const { return mode_; }

  // Function part of W^g_n; computes and memoizes anything missing.
  const RationalFunction& w(int g, int n);
  std::vector<std::pair<int, int>> memoized_keys() const;

  // F_g = (1/(2g-2)) sum_a Res_a Phi W^g_1; exact, asserted rational.
  Rational free_energy(int g);
  // Same with per-point constants added to Phi (residuelessness makes the
  // choice of primitive immaterial; this knob exercises that).
  Rational free_energy_with_phi_shift(int g, const std::vector<Rational>& shifts);

  // The function part of -dS_{q,o}(p0) / prod_{i in subset} omega(q, theta_i(q)),
  // local at point `pi`; subset holds deck indices 1..k-1.
  RatFunSeries kernel(size_t pi, const std::vector<int>& subset);
  // dS numerator series alone (1/(p0 - q(s)) - 1/(p0 - o)).
  const RatFunSeries& ds_series(size_t pi);
  // omega(q, theta_j(q)) = (y(q) - y(theta_j(q))) * dx(q) as a local series.
  const FieldSeries& omega(size_t pi, int j) const { return pd_[pi].omega[static_cast<size_t>(j - 1)]; }
  // Curly-W sum at point `pi` with the given branch slots (0 = q itself) and
  // symbolic arguments; chain-rule factors of the substituted slots included.
  RatFunSeries curly_w(size_t pi, int g, const std::vector<int>& slots,
                       const std::vector<VarId>& syms);

  // Verification batteries. Failures are report content, not errors.
  CheckReport check_symmetry(int g, int n);
  CheckReport check_dilaton(int g, int n);
  CheckReport check_w03();
  CheckReport check_residueless(int g);
  CheckReport check_deck_closure();

 private:
  struct PointData {
    std::vector<FieldSeries> omega;  // per deck j: (y(q) - y(theta_j(q))) * dx
    RatFunSeries dS;
    bool dS_ready = false;
    std::map<std::vector<int>, FieldSeries> omega_inv;  // per deck subset
    std::map<std::vector<int>, FieldSeries> scalar_factors;
    std::map<std::vector<int>, RatFunSeries> sym_factors;
  };

  RationalFunction compute(int g, int n);
  RationalFunction compute_general(int g, int n);
  RationalFunction compute_simple(int g, int n);
  const FieldSeries& omega_subset_inverse(size_t pi, const std::vector<int>& subset);
  FieldSeries scalar_factor(size_t pi, int g, const std::vector<int>& slots);
  RatFunSeries sym_factor(size_t pi, int g, const std::vector<int>& slots,
                          const std::vector<VarId>& syms);
  FieldSeries curly_scalar(size_t pi, int g, const std::vector<int>& slots);
  RatFunSeries curly_symbolic(size_t pi, int g, const std::vector<int>& slots,
                              const std::vector<VarId>& syms);
  FieldSeries curly_scalar_simple(size_t pi, int g);
  RatFunSeries curly_symbolic_simple(size_t pi, int g, const std::vector<VarId>& syms);
  // W^g_m evaluated with mixed series/symbol arguments (no chain factors).
  RatFunSeries eval_correlator(int g, int m, size_t pi, const std::vector<int>& slots,
                               const std::vector<VarId>& syms);

  CurveAnalysis A_;
  RecursionMode mode_;
  long cap_;  // series cap = work_order + 2
  std::map<std::pair<int, int>, RationalFunction> memo_;
  std::vector<PointData> pd_;
};

// The canonical bilinear kernel on the sphere, in its three argument shapes.
// Chain-rule factors of series substitutions are the caller's business.
RationalFunction w02_symbolic(VarId a, VarId b);  // 1/(pa - pb)^2
FieldSeries w02_pair(const RamPoint& pt, int i, int j, long cap);
RatFunSeries w02_mixed(const RamPoint& pt, int i, VarId sym, long cap);

// B_{2g}/(2g(2g-2)), by the Bernoulli recurrence.
Rational bernoulli_reference(int g);

struct SwapCompareEntry {
  int g = 0;
  Rational f;
  Rational f_swapped;
  bool equal = false;
  Rational difference;
};

struct SwapCompareReport {
  std::vector<SwapCompareEntry> entries;
  std::vector<std::string> errors;  // per-side validation failures
  bool all_equal() const {
    for (const auto& e : entries)
      if (!e.equal) return false;
    return true;
  }
};

// Session wrapper: analyzes the curve for the requested targets and, when
// verify is set, recomputes every reported quantity at work order O+8 and
// demands an exact match (TruncationError otherwise).
class Engine {
 public:
  Engine(SpectralCurve curve, int g_max, int n_max,
         RecursionMode mode = RecursionMode::General, bool verify = true);

  CorrelatorStore& store() { return *primary_; }
  const CurveAnalysis& analysis() const { return primary_->analysis(); }

  RationalFunction wgn(int g, int n);
  Rational free_energy(int g);

 private:
  CorrelatorStore& shadow();

  SpectralCurve curve_;
  int g_max_, n_max_;
  RecursionMode mode_;
  bool verify_;
  std::unique_ptr<CorrelatorStore> primary_;
  std::unique_ptr<CorrelatorStore> shadow_;  // lazily built at O+8
};

// F_g vs the swapped curve's F_g for 2 <= g <= g_max.
SwapCompareReport symplectic_compare(const SpectralCurve& curve, int g_max,
                                     bool verify = true);

}  // namespace ramrec

#endif
