#include "ramrec/engine.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace ramrec {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void rgs_rec(int i, int k, int mx, std::vector<int>& a, std::vector<SetPartition>& out) {
  if (i == k) {
    int nb = mx + 1;
    SetPartition sp;
    sp.blocks.assign(static_cast<size_t>(nb), {});
    for (int pos = 0; pos < k; ++pos) sp.blocks[static_cast<size_t>(a[pos])].push_back(pos);
    out.push_back(std::move(sp));
    return;
  }
  for (int v = 0; v <= mx + 1; ++v) {
    a[static_cast<size_t>(i)] = v;
    rgs_rec(i + 1, k, std::max(mx, v), a, out);
  }
}

// All tuples of `slots` non-negative integers summing to `total`.
void compositions(int total, int slots, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
  if (slots == 1) {
    cur.push_back(total);
    fn(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, slots - 1, cur, fn);
    cur.pop_back();
  }
}

std::string gn_name(int g, int n) {
  return "W[g=" + std::to_string(g) + ",n=" + std::to_string(n) + "]";
}

}  // namespace

std::vector<SetPartition> set_partitions(int k) {
  std::vector<SetPartition> out;
  if (k <= 0) return out;
  std::vector<int> a(static_cast<size_t>(k), 0);
  rgs_rec(1, k, 0, a, out);
  return out;
}

CorrelatorStore::CorrelatorStore(CurveAnalysis analysis, RecursionMode mode)
    : A_(std::move(analysis)), mode_(mode), cap_(A_.work_order + 2) {
  if (mode_ == RecursionMode::SimpleRamificationOnly)
    for (const auto& pt : A_.points)
      if (pt.index != 2)
        fail(ErrorKind::ValidationError,
             "the simple-ramification recursion needs every index equal to 2 "
             "(found index " +
                 std::to_string(pt.index) + " at t = " + pt.label() + ")");
  pd_.resize(A_.points.size());
  for (size_t i = 0; i < A_.points.size(); ++i) {
    const RamPoint& pt = A_.points[i];
    for (int j = 1; j < pt.index; ++j) {
      FieldSeries yd = pt.y_branch[0] - pt.y_branch[static_cast<size_t>(j)];
      if (yd.known_zero())
        fail(ErrorKind::ZeroOmega,
             "y takes equal values on two colliding branches at t = " + pt.label());
      pd_[i].omega.push_back(yd * pt.dx_loc);
    }
  }
  RationalFunction p0 = RationalFunction::variable(p_var(0));
  RationalFunction p1 = RationalFunction::variable(p_var(1));
  memo_.emplace(std::make_pair(0, 2), (p0 - p1).pow(-2));
}

std::vector<std::pair<int, int>> CorrelatorStore::memoized_keys() const {
  std::vector<std::pair<int, int>> keys;
  keys.reserve(memo_.size());
  for (const auto& [k, v] : memo_) keys.push_back(k);
  return keys;
}

const RationalFunction& CorrelatorStore::w(int g, int n) {
  auto it = memo_.find({g, n});
  if (it != memo_.end()) return it->second;
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0)
    fail(ErrorKind::ValidationError,
         "correlator " + gn_name(g, n) + " is not defined by the recursion");
  RationalFunction value = compute(g, n);
  return memo_.emplace(std::make_pair(g, n), std::move(value)).first->second;
}

RationalFunction CorrelatorStore::compute(int g, int n) {
  return mode_ == RecursionMode::General ? compute_general(g, n) : compute_simple(g, n);
}

const RatFunSeries& CorrelatorStore::ds_series(size_t pi) {
  PointData& P = pd_[pi];
  if (!P.dS_ready) {
    const RamPoint& pt = A_.points[pi];
    RatFunSeries q = promote_series(pt.branch[0]);
    RatFunSeries diff = RatFunSeries::monomial(RationalFunction::variable(p_var(0)), 0) - q;
    RatFunSeries term = diff.inverted(cap_);
    if (A_.curve.base_point) {
      RationalFunction pole =
          RationalFunction::variable(p_var(0)) -
          RationalFunction::constant(*A_.curve.base_point);
      term = term - RatFunSeries::monomial(pole.inverse(), 0);
    }
    P.dS = std::move(term);
    P.dS_ready = true;
  }
  return P.dS;
}

const FieldSeries& CorrelatorStore::omega_subset_inverse(size_t pi,
                                                         const std::vector<int>& subset) {
  PointData& P = pd_[pi];
  auto it = P.omega_inv.find(subset);
  if (it != P.omega_inv.end()) return it->second;
  FieldSeries prod = FieldSeries::one();
  for (int j : subset) prod = prod * P.omega[static_cast<size_t>(j - 1)];
  return P.omega_inv.emplace(subset, prod.inverted(cap_)).first->second;
}

RatFunSeries CorrelatorStore::kernel(size_t pi, const std::vector<int>& subset) {
  if (subset.empty()) fail(ErrorKind::ValidationError, "kernel needs a non-empty deck subset");
  return -(ds_series(pi) * promote_series(omega_subset_inverse(pi, subset)));
}

RationalFunction w02_symbolic(VarId a, VarId b) {
  if (a == b) fail(ErrorKind::DegenerateW02, "both arguments are the same symbol");
  return (RationalFunction::variable(a) - RationalFunction::variable(b)).pow(-2);
}

FieldSeries w02_pair(const RamPoint& pt, int i, int j, long cap) {
  if (i == j) fail(ErrorKind::DegenerateW02, "both arguments are the same branch series");
  FieldSeries diff =
      pt.branch[static_cast<size_t>(i)] - pt.branch[static_cast<size_t>(j)];
  if (diff.known_zero())
    fail(ErrorKind::DegenerateW02, "branch series coincide to truncation order");
  return (diff * diff).inverted(cap);
}

RatFunSeries w02_mixed(const RamPoint& pt, int i, VarId sym, long cap) {
  RatFunSeries diff = RatFunSeries::monomial(RationalFunction::variable(sym), 0) -
                      promote_series(pt.branch[static_cast<size_t>(i)]);
  return (diff * diff).inverted(cap);
}

FieldSeries CorrelatorStore::scalar_factor(size_t pi, int g, const std::vector<int>& slots) {
  PointData& P = pd_[pi];
  std::vector<int> key;
  key.push_back(g);
  key.insert(key.end(), slots.begin(), slots.end());
  auto it = P.scalar_factors.find(key);
  if (it != P.scalar_factors.end()) return it->second;
  const RamPoint& pt = A_.points[pi];
  FieldSeries val;
  if (g == 0 && slots.size() == 2) {
    val = w02_pair(pt, slots[0], slots[1], cap_);
  } else {
    int m = static_cast<int>(slots.size());
    const RationalFunction& wf = w(g, m);
    std::map<VarId, FieldSeries> assign;
    for (int i = 0; i < m; ++i)
      assign.emplace(p_var(i), pt.branch[static_cast<size_t>(slots[static_cast<size_t>(i)])]);
    val = substitute_series_full(wf, assign, cap_);
  }
  for (int s : slots) val = val * pt.branch_d[static_cast<size_t>(s)];
  return pd_[pi].scalar_factors.emplace(std::move(key), std::move(val)).first->second;
}

RatFunSeries CorrelatorStore::eval_correlator(int g, int m, size_t pi,
                                              const std::vector<int>& slots,
                                              const std::vector<VarId>& syms) {
  const RationalFunction& wf = w(g, m);
  const RamPoint& pt = A_.points[pi];
  // Simultaneous rename: slot variables to scratch ids, symbol variables to
  // the caller's ids; then substitute the branch series for the scratch ids.
  constexpr VarId kScratch = 1000;
  std::map<VarId, VarId> ren;
  for (size_t i = 0; i < slots.size(); ++i)
    ren.emplace(p_var(static_cast<int>(i)), kScratch + static_cast<VarId>(i));
  for (size_t i = 0; i < syms.size(); ++i)
    ren.emplace(p_var(static_cast<int>(slots.size() + i)), syms[i]);
  RationalFunction wr = wf.renamed(ren);
  std::map<VarId, FieldSeries> assign;
  for (size_t i = 0; i < slots.size(); ++i)
    assign.emplace(kScratch + static_cast<VarId>(i),
                   pt.branch[static_cast<size_t>(slots[i])]);
  return substitute_series(wr, assign, cap_);
}

RatFunSeries CorrelatorStore::sym_factor(size_t pi, int g, const std::vector<int>& slots,
                                         const std::vector<VarId>& syms) {
  PointData& P = pd_[pi];
  std::vector<int> key;
  key.push_back(g);
  key.insert(key.end(), slots.begin(), slots.end());
  key.push_back(-1);
  for (VarId v : syms) key.push_back(v);
  auto it = P.sym_factors.find(key);
  if (it != P.sym_factors.end()) return it->second;
  const RamPoint& pt = A_.points[pi];
  RatFunSeries val;
  int m = static_cast<int>(slots.size() + syms.size());
  if (g == 0 && m == 2 && slots.size() == 1) {
    val = w02_mixed(pt, slots[0], syms[0], cap_);
  } else {
    val = eval_correlator(g, m, pi, slots, syms);
  }
  for (int s : slots) val = val * promote_series(pt.branch_d[static_cast<size_t>(s)]);
  return pd_[pi].sym_factors.emplace(std::move(key), std::move(val)).first->second;
}

FieldSeries CorrelatorStore::curly_scalar(size_t pi, int g, const std::vector<int>& slots) {
  const int k = static_cast<int>(slots.size());
  FieldSeries acc = FieldSeries::exact_zero();
  for (const SetPartition& mu : set_partitions(k)) {
    const int l = static_cast<int>(mu.blocks.size());
    const int total = g + l - k;
    if (total < 0) continue;
    std::vector<int> cur;
    compositions(total, l, cur, [&](const std::vector<int>& gs) {
      for (int i = 0; i < l; ++i)
        if (gs[static_cast<size_t>(i)] == 0 && mu.blocks[static_cast<size_t>(i)].size() == 1)
          return;  // excluded (0,1) piece
      FieldSeries term = FieldSeries::one();
      for (int i = 0; i < l; ++i) {
        std::vector<int> block_slots;
        for (int pos : mu.blocks[static_cast<size_t>(i)])
          block_slots.push_back(slots[static_cast<size_t>(pos)]);
        term = term * scalar_factor(pi, gs[static_cast<size_t>(i)], block_slots);
        if (term.known_zero() && term.is_exact()) break;
      }
      acc = acc + term;
    });
  }
  return acc;
}

RatFunSeries CorrelatorStore::curly_symbolic(size_t pi, int g, const std::vector<int>& slots,
                                             const std::vector<VarId>& syms) {
  const int k = static_cast<int>(slots.size());
  const int n = static_cast<int>(syms.size());
  RatFunSeries acc = RatFunSeries::exact_zero();
  for (const SetPartition& mu : set_partitions(k)) {
    const int l = static_cast<int>(mu.blocks.size());
    const int total = g + l - k;
    if (total < 0) continue;
    std::vector<int> cur;
    compositions(total, l, cur, [&](const std::vector<int>& gs) {
      // All assignments of the n symbols to the l distinguishable blocks.
      std::vector<int> digits(static_cast<size_t>(n), 0);
      while (true) {
        std::vector<std::vector<VarId>> block_syms(static_cast<size_t>(l));
        for (int i = 0; i < n; ++i)
          block_syms[static_cast<size_t>(digits[static_cast<size_t>(i)])].push_back(
              syms[static_cast<size_t>(i)]);
        bool excluded = false;
        for (int i = 0; i < l && !excluded; ++i)
          if (gs[static_cast<size_t>(i)] == 0 &&
              mu.blocks[static_cast<size_t>(i)].size() + block_syms[static_cast<size_t>(i)].size() == 1)
            excluded = true;
        if (!excluded) {
          FieldSeries scal = FieldSeries::one();
          RatFunSeries symp = RatFunSeries::one();
          bool has_sym = false, dead = false;
          for (int i = 0; i < l && !dead; ++i) {
            std::vector<int> block_slots;
            for (int pos : mu.blocks[static_cast<size_t>(i)])
              block_slots.push_back(slots[static_cast<size_t>(pos)]);
            if (block_syms[static_cast<size_t>(i)].empty()) {
              scal = scal * scalar_factor(pi, gs[static_cast<size_t>(i)], block_slots);
              dead = scal.known_zero() && scal.is_exact();
            } else {
              symp = symp * sym_factor(pi, gs[static_cast<size_t>(i)], block_slots,
                                       block_syms[static_cast<size_t>(i)]);
              has_sym = true;
              dead = symp.known_zero() && symp.is_exact();
            }
          }
          if (!dead) {
            RatFunSeries term = has_sym ? symp * promote_series(scal) : promote_series(scal);
            acc = acc + term;
          }
        }
        // Advance the assignment counter.
        int pos = 0;
        while (pos < n) {
          if (++digits[static_cast<size_t>(pos)] < l) break;
          digits[static_cast<size_t>(pos)] = 0;
          ++pos;
        }
        if (pos == n || n == 0) break;
      }
    });
  }
  return acc;
}

RatFunSeries CorrelatorStore::curly_w(size_t pi, int g, const std::vector<int>& slots,
                                      const std::vector<VarId>& syms) {
  if (slots.size() < 2) fail(ErrorKind::ValidationError, "curly-W needs at least two slots");
  if (syms.empty()) return promote_series(curly_scalar(pi, g, slots));
  return curly_symbolic(pi, g, slots, syms);
}

FieldSeries CorrelatorStore::curly_scalar_simple(size_t pi, int g) {
  FieldSeries acc = FieldSeries::exact_zero();
  if (g >= 1) acc = acc + scalar_factor(pi, g - 1, {0, 1});
  for (int g1 = 1; g1 <= g - 1; ++g1)
    acc = acc + scalar_factor(pi, g1, {0}) * scalar_factor(pi, g - g1, {1});
  return acc;
}

RatFunSeries CorrelatorStore::curly_symbolic_simple(size_t pi, int g,
                                                    const std::vector<VarId>& syms) {
  const int n = static_cast<int>(syms.size());
  RatFunSeries acc = RatFunSeries::exact_zero();
  if (g >= 1) acc = acc + sym_factor(pi, g - 1, {0, 1}, syms);
  for (int g1 = 0; g1 <= g; ++g1) {
    int g2 = g - g1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<VarId> r1, r2;
      for (int i = 0; i < n; ++i)
        ((mask >> i) & 1u ? r1 : r2).push_back(syms[static_cast<size_t>(i)]);
      if (g1 == 0 && r1.empty()) continue;
      if (g2 == 0 && r2.empty()) continue;
      RatFunSeries f1 = r1.empty() ? promote_series(scalar_factor(pi, g1, {0}))
                                   : sym_factor(pi, g1, {0}, r1);
      RatFunSeries f2 = r2.empty() ? promote_series(scalar_factor(pi, g2, {1}))
                                   : sym_factor(pi, g2, {1}, r2);
      acc = acc + f1 * f2;
    }
  }
  return acc;
}

RationalFunction CorrelatorStore::compute_general(int g, int n_target) {
  const int n = n_target - 1;
  std::vector<VarId> syms;
  for (int i = 1; i <= n; ++i) syms.push_back(p_var(i));
  RationalFunction result = RationalFunction::zero();
  for (size_t pi = 0; pi < A_.points.size(); ++pi) {
    const int dk = A_.points[pi].index - 1;
    for (unsigned mask = 1; mask < (1u << dk); ++mask) {
      std::vector<int> subset;
      for (int j = 0; j < dk; ++j)
        if ((mask >> j) & 1u) subset.push_back(j + 1);
      std::vector<int> slots;
      slots.push_back(0);
      slots.insert(slots.end(), subset.begin(), subset.end());
      RatFunSeries contrib;
      if (n == 0) {
        FieldSeries core = curly_scalar(pi, g, slots);
        if (core.known_zero() && core.is_exact()) continue;
        core = core * omega_subset_inverse(pi, subset);
        contrib = ds_series(pi) * promote_series(core);
      } else {
        RatFunSeries cw = curly_symbolic(pi, g, slots, syms);
        if (cw.known_zero() && cw.is_exact()) continue;
        cw = cw * promote_series(omega_subset_inverse(pi, subset));
        contrib = ds_series(pi) * cw;
      }
      result -= contrib.residue();
    }
  }
  return result;
}

RationalFunction CorrelatorStore::compute_simple(int g, int n_target) {
  const int n = n_target - 1;
  std::vector<VarId> syms;
  for (int i = 1; i <= n; ++i) syms.push_back(p_var(i));
  RationalFunction result = RationalFunction::zero();
  const std::vector<int> subset{1};
  for (size_t pi = 0; pi < A_.points.size(); ++pi) {
    RatFunSeries contrib;
    if (n == 0) {
      FieldSeries core = curly_scalar_simple(pi, g);
      if (core.known_zero() && core.is_exact()) continue;
      core = core * omega_subset_inverse(pi, subset);
      contrib = ds_series(pi) * promote_series(core);
    } else {
      RatFunSeries cw = curly_symbolic_simple(pi, g, syms);
      if (cw.known_zero() && cw.is_exact()) continue;
      cw = cw * promote_series(omega_subset_inverse(pi, subset));
      contrib = ds_series(pi) * cw;
    }
    result -= contrib.residue();
  }
  return result;
}

Rational CorrelatorStore::free_energy(int g) {
  return free_energy_with_phi_shift(g, {});
}

Rational CorrelatorStore::free_energy_with_phi_shift(int g,
                                                     const std::vector<Rational>& shifts) {
  if (g < 2) fail(ErrorKind::ValidationError, "free energies are defined for g >= 2");
  w(g, 1);
  FieldElement total = FieldElement::zero();
  for (size_t pi = 0; pi < A_.points.size(); ++pi) {
    FieldSeries phi = A_.points[pi].phi;
    if (pi < shifts.size() && shifts[pi] != 0)
      phi = phi + FieldSeries::monomial(FieldElement::from_rational(shifts[pi]), 0);
    total += (phi * scalar_factor(pi, g, {0})).residue();
  }
  total /= FieldElement::from_int(2 * g - 2);
  if (!total.is_rational())
    fail(ErrorKind::InternalError,
         "free energy F_" + std::to_string(g) +
             " failed the rationality assertion: " + total.to_string());
  return total.rational_value();
}

CheckReport CorrelatorStore::check_symmetry(int g, int n) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.name = "symmetry " + gn_name(g, n);
  const RationalFunction& wf = w(g, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::map<VarId, VarId> swap_map{{p_var(i), p_var(j)}, {p_var(j), p_var(i)}};
      if (wf.renamed(swap_map) != wf) {
        rep.pass = false;
        rep.details.push_back("not invariant under swapping p" + std::to_string(i) +
                              " and p" + std::to_string(j));
      }
    }
  }
  rep.ms = ms_since(t0);
  return rep;
}

CheckReport CorrelatorStore::check_dilaton(int g, int n) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.name = "dilaton (g=" + std::to_string(g) + ",n=" + std::to_string(n) + ")";
  if (2 * g - 2 + n <= 0) fail(ErrorKind::ValidationError, "dilaton check needs a stable target");
  const RationalFunction wnext = w(g, n + 1);
  const RationalFunction& lhs = w(g, n);
  constexpr VarId kScratch = 1000;
  RationalFunction rhs = RationalFunction::zero();
  for (size_t pi = 0; pi < A_.points.size(); ++pi) {
    const RamPoint& pt = A_.points[pi];
    std::map<VarId, VarId> ren{{p_var(0), kScratch}};
    for (int i = 1; i <= n; ++i) ren.emplace(p_var(i), p_var(i - 1));
    RationalFunction wr = wnext.renamed(ren);
    std::map<VarId, FieldSeries> assign{{kScratch, pt.branch[0]}};
    RatFunSeries ev = substitute_series(wr, assign, cap_);
    ev = ev * promote_series(pt.branch_d[0] * pt.phi);
    rhs += ev.residue();
  }
  rhs = rhs / RationalFunction::from_int(2 * g - 2 + n);
  rep.pass = rhs == lhs;
  if (!rep.pass) {
    rep.details.push_back("lhs = " + lhs.to_string());
    rep.details.push_back("rhs = " + rhs.to_string());
  }
  rep.ms = ms_since(t0);
  return rep;
}

CheckReport CorrelatorStore::check_w03() {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.name = "W03 residue formula";
  const RationalFunction& w03 = w(0, 3);
  RationalFunction formula = RationalFunction::zero();
  for (size_t pi = 0; pi < A_.points.size(); ++pi) {
    const RamPoint& pt = A_.points[pi];
    RatFunSeries prod = RatFunSeries::one();
    for (int i = 0; i < 3; ++i) prod = prod * sym_factor(pi, 0, {0}, {p_var(i)});
    FieldSeries dxdy = pt.dx_loc * pt.y_loc.derivative();
    RatFunSeries ev = prod * promote_series(dxdy.inverted(cap_));
    formula += ev.residue();
  }
  rep.pass = formula == w03;
  if (!rep.pass) {
    rep.details.push_back("recursion = " + w03.to_string());
    rep.details.push_back("formula   = " + formula.to_string());
  }
  rep.ms = ms_since(t0);
  return rep;
}

CheckReport CorrelatorStore::check_residueless(int g) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.name = "residueless W[g=" + std::to_string(g) + ",n=1] and base independence";
  for (size_t pi = 0; pi < A_.points.size(); ++pi) {
    FieldElement res = scalar_factor(pi, g, {0}).residue();
    if (!res.is_zero()) {
      rep.pass = false;
      rep.details.push_back("Res at t = " + A_.points[pi].label() + " is " + res.to_string());
    }
  }
  Rational base = free_energy(g);
  std::vector<Rational> shifts;
  for (size_t pi = 0; pi < A_.points.size(); ++pi)
    shifts.push_back(Rational(3 + static_cast<long>(pi), 2));
  Rational shifted = free_energy_with_phi_shift(g, shifts);
  if (shifted != base) {
    rep.pass = false;
    rep.details.push_back("F_" + std::to_string(g) + " moved under a primitive shift: " +
                          base.str() + " vs " + shifted.str());
  }
  rep.ms = ms_since(t0);
  return rep;
}

CheckReport CorrelatorStore::check_deck_closure() {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.name = "deck group closure and x o theta = x";
  for (size_t pi = 0; pi < A_.points.size(); ++pi) {
    const RamPoint& pt = A_.points[pi];
    const int k = pt.index;
    std::vector<FieldSeries> thetas;
    thetas.push_back(FieldSeries::identity());
    for (const auto& d : pt.decks) thetas.push_back(d);
    for (int m = 0; m < k; ++m) {
      for (int nn = 0; nn < k; ++nn) {
        FieldSeries comp = FieldSeries::compose(thetas[static_cast<size_t>(m)],
                                                thetas[static_cast<size_t>(nn)], cap_);
        const FieldSeries& target = thetas[static_cast<size_t>((m + nn) % k)];
        long upto = std::min(comp.order(), std::min(target.order(), A_.work_order));
        if (!comp.agrees_with(target, upto)) {
          rep.pass = false;
          rep.details.push_back("closure fails at t = " + pt.label() + " for (" +
                                std::to_string(m) + "," + std::to_string(nn) + ")");
        }
      }
    }
    for (size_t j = 0; j < pt.decks.size(); ++j) {
      FieldSeries xj = FieldSeries::compose(pt.x_loc, pt.decks[j], cap_);
      long upto = std::min(xj.order(), std::min(pt.x_loc.order(), A_.work_order));
      if (!xj.agrees_with(pt.x_loc, upto)) {
        rep.pass = false;
        rep.details.push_back("x o theta != x at t = " + pt.label() + " deck " +
                              std::to_string(j + 1));
      }
    }
  }
  rep.ms = ms_since(t0);
  return rep;
}

Rational bernoulli_reference(int g) {
  if (g < 2) fail(ErrorKind::ValidationError, "reference value needs g >= 2");
  static std::vector<Rational> bern{Rational(1)};
  size_t need = static_cast<size_t>(2 * g);
  while (bern.size() <= need) {
    size_t m = bern.size();
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc(0);
    Integer binom = 1;  // C(m+1, 0)
    for (size_t j = 0; j < m; ++j) {
      acc += Rational(binom) * bern[j];
      binom = binom * Integer(m + 1 - j) / Integer(j + 1);
    }
    bern.push_back(-acc / Rational(binom));  // binom = C(m+1, m) = m+1
  }
  return bern[need] / Rational(2 * g * (2 * g - 2));
}

Engine::Engine(SpectralCurve curve, int g_max, int n_max, RecursionMode mode, bool verify)
    : curve_(std::move(curve)), g_max_(g_max), n_max_(n_max), mode_(mode), verify_(verify) {
  primary_ = std::make_unique<CorrelatorStore>(analyze_curve(curve_, g_max_, n_max_), mode_);
}

CorrelatorStore& Engine::shadow() {
  if (!shadow_) {
    SpectralCurve c2 = curve_;
    c2.truncation_order = primary_->analysis().work_order + 8;
    shadow_ = std::make_unique<CorrelatorStore>(analyze_curve(c2, g_max_, n_max_), mode_);
  }
  return *shadow_;
}

RationalFunction Engine::wgn(int g, int n) {
  RationalFunction v = primary_->w(g, n);
  if (verify_ && shadow().w(g, n) != v)
    fail(ErrorKind::TruncationError,
         gn_name(g, n) + " changed when recomputed at truncation order O+8");
  return v;
}

Rational Engine::free_energy(int g) {
  Rational v = primary_->free_energy(g);
  if (verify_ && shadow().free_energy(g) != v)
    fail(ErrorKind::TruncationError,
         "F_" + std::to_string(g) + " changed when recomputed at truncation order O+8");
  return v;
}

SwapCompareReport symplectic_compare(const SpectralCurve& curve, int g_max, bool verify) {
  SwapCompareReport rep;
  std::unique_ptr<Engine> side_a, side_b;
  try {
    side_a = std::make_unique<Engine>(curve, g_max, 1, RecursionMode::General, verify);
  } catch (const Error& e) {
    rep.errors.push_back(std::string("original curve: ") + e.what());
  }
  try {
    side_b = std::make_unique<Engine>(swapped(curve), g_max, 1, RecursionMode::General, verify);
  } catch (const Error& e) {
    rep.errors.push_back(std::string("swapped curve: ") + e.what());
  }
  if (!side_a || !side_b) return rep;
  for (int g = 2; g <= g_max; ++g) {
    SwapCompareEntry e;
    e.g = g;
    e.f = side_a->free_energy(g);
    e.f_swapped = side_b->free_energy(g);
    e.difference = e.f - e.f_swapped;
    e.equal = e.difference == 0;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace ramrec
