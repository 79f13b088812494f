#include "tiltcube/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace tiltcube {

std::vector<Window> window_sets_12(int n) {
  if (n < 1) throw std::invalid_argument("window family needs n >= 1");
  std::vector<Window> windows;
  for (int l = 0; 3 * l <= n; ++l) {
    Window w;
    for (int j = l; j <= 2 * l; ++j) w.push_back(j);
    windows.push_back(std::move(w));
  }
  for (int k = (2 * n + 2) / 3; k <= n; ++k) {
    Window w;
    for (int j = 2 * k - n; j <= k; ++j) w.push_back(j);
    windows.push_back(std::move(w));
  }
  return windows;
}

std::vector<Window> window_sets_pq(int n, int p, int q) {
  if (p < 1 || p >= q || std::gcd(p, q) != 1)
    throw std::invalid_argument("window classes need coprime p < q");
  int lo = (p * n + p + q - 1) / (p + q);  // ceil(pn/(p+q))
  int hi = q * n / (p + q);                // floor(qn/(p+q))
  std::vector<Window> classes(q - p);
  for (int l = lo; l <= hi; ++l) classes[l % (q - p)].push_back(l);
  return classes;
}

WindowCheck check_windows(const LevelProfile& profile, const std::vector<Window>& windows) {
  const int n = profile.levels();
  WindowCheck result;
  result.pass = true;
  for (const Window& w : windows) {
    Rational sum = 0;
    for (int j : w) {
      if (j < 0 || j > n) throw std::invalid_argument("window index outside profile range");
      sum += profile.counts[j] / Rational(binomial(n, j));
    }
    if (sum > 1) result.pass = false;
    result.sums.push_back(std::move(sum));
  }
  return result;
}

LinearProgram build_lp(int n, int p, int q, LpVariant variant) {
  if (variant == LpVariant::full && !(p == 1 && q == 2))
    throw std::invalid_argument("full window family is only available for ratio 1:2");
  LinearProgram lp;
  lp.n = n;
  lp.windows = variant == LpVariant::full ? window_sets_12(n) : window_sets_pq(n, p, q);
  lp.box.reserve(n + 1);
  for (int j = 0; j <= n; ++j) lp.box.push_back(binomial(n, j));
  return lp;
}

namespace {

// Dense exact-rational tableau for max c.x, A x <= b, x >= 0 with slack
// identity basis. Rows: windows first, then one box row per variable.
struct Tableau {
  int nvars = 0;
  int nrows = 0;
  std::vector<std::vector<Rational>> rows;  // nrows x (nvars + nrows + 1)
  std::vector<int> basis;                   // basic column per row

  int cols() const { return nvars + nrows + 1; }
  int rhs_col() const { return nvars + nrows; }
};

Tableau make_tableau(const LinearProgram& lp) {
  const int nvars = lp.n + 1;
  const int nwin = static_cast<int>(lp.windows.size());
  Tableau tab;
  tab.nvars = nvars;
  tab.nrows = nwin + nvars;
  tab.rows.assign(tab.nrows, std::vector<Rational>(tab.cols(), Rational(0)));
  tab.basis.resize(tab.nrows);
  for (int i = 0; i < nwin; ++i) {
    for (int j : lp.windows[i]) {
      if (j < 0 || j > lp.n) throw std::invalid_argument("window index outside [0,n]");
      tab.rows[i][j] = Rational(1, BigInt(binomial(lp.n, j)));
    }
    tab.rows[i][tab.rhs_col()] = 1;
  }
  for (int j = 0; j < nvars; ++j) {
    int row = nwin + j;
    tab.rows[row][j] = 1;
    tab.rows[row][tab.rhs_col()] = Rational(lp.box[j]);
  }
  for (int i = 0; i < tab.nrows; ++i) {
    tab.basis[i] = nvars + i;
    tab.rows[i][nvars + i] = 1;
  }
  return tab;
}

void pivot(Tableau& tab, int row, int col) {
  Rational inv = Rational(1) / tab.rows[row][col];
  for (auto& v : tab.rows[row]) v *= inv;
  for (int i = 0; i < tab.nrows; ++i) {
    if (i == row || tab.rows[i][col] == 0) continue;
    Rational factor = tab.rows[i][col];
    for (int j = 0; j < tab.cols(); ++j) tab.rows[i][j] -= factor * tab.rows[row][j];
  }
  tab.basis[row] = col;
}

// Reduced costs r_j = c_j - c_B . T[:,j] for every column.
std::vector<Rational> reduced_costs(const Tableau& tab, const std::vector<Rational>& cost) {
  std::vector<Rational> r(cost);
  for (int i = 0; i < tab.nrows; ++i) {
    const Rational& cb = cost[tab.basis[i]];
    if (cb == 0) continue;
    for (int j = 0; j < tab.nvars + tab.nrows; ++j) {
      if (tab.rows[i][j] != 0) r[j] -= cb * tab.rows[i][j];
    }
  }
  return r;
}

// Primal simplex with Bland's rule; `frozen` columns never enter the basis.
// Returns at optimality (bounded by construction: every variable is boxed).
void optimize(Tableau& tab, const std::vector<Rational>& cost, const std::vector<bool>& frozen) {
  for (;;) {
    std::vector<Rational> r = reduced_costs(tab, cost);
    int entering = -1;
    for (int j = 0; j < tab.nvars + tab.nrows; ++j) {
      if (!frozen[j] && r[j] > 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return;
    int leaving = -1;
    Rational best_ratio;
    for (int i = 0; i < tab.nrows; ++i) {
      if (tab.rows[i][entering] <= 0) continue;
      Rational ratio = tab.rows[i][tab.rhs_col()] / tab.rows[i][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[i] < tab.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) throw std::logic_error("boxed LP reported unbounded");
    pivot(tab, leaving, entering);
  }
}

std::vector<Rational> structural_solution(const Tableau& tab) {
  std::vector<Rational> x(tab.nvars, Rational(0));
  for (int i = 0; i < tab.nrows; ++i)
    if (tab.basis[i] < tab.nvars) x[tab.basis[i]] = tab.rows[i][tab.rhs_col()];
  return x;
}

Rational objective_value(const std::vector<Rational>& x) {
  Rational sum = 0;
  for (const Rational& v : x) sum += v;
  return sum;
}

}  // namespace

LPSolution solve_lp_exact(const LinearProgram& lp) {
  if (lp.n < 0 || lp.box.size() != static_cast<std::size_t>(lp.n + 1))
    throw std::invalid_argument("LP box bounds must cover x_0..x_n");
  for (const BigInt& b : lp.box)
    if (b < 0) throw std::invalid_argument("LP box bounds must be nonnegative");

  Tableau tab = make_tableau(lp);
  const int total_cols = tab.nvars + tab.nrows;
  std::vector<Rational> cost(total_cols, Rational(0));
  for (int j = 0; j < tab.nvars; ++j) cost[j] = 1;
  std::vector<bool> none(total_cols, false);
  optimize(tab, cost, none);

  LPSolution sol;
  sol.profile.counts = structural_solution(tab);
  sol.optimum = objective_value(sol.profile.counts);

  // dual values y_i = c_B . (B^-1 e_i), read off the slack columns
  std::vector<Rational> final_r = reduced_costs(tab, cost);
  sol.dual.reserve(tab.nrows);
  for (int i = 0; i < tab.nrows; ++i) sol.dual.push_back(-final_r[tab.nvars + i]);

  // certificate: y >= 0, A^T y >= c, b.y == optimum (exact)
  const int nwin = static_cast<int>(lp.windows.size());
  Rational dual_obj = 0;
  for (int i = 0; i < nwin; ++i) {
    if (sol.dual[i] < 0) throw std::logic_error("negative window dual");
    dual_obj += sol.dual[i];
  }
  for (int j = 0; j <= lp.n; ++j) {
    if (sol.dual[nwin + j] < 0) throw std::logic_error("negative box dual");
    dual_obj += sol.dual[nwin + j] * Rational(lp.box[j]);
  }
  for (int j = 0; j <= lp.n; ++j) {
    Rational lhs = sol.dual[nwin + j];
    for (int i = 0; i < nwin; ++i) {
      if (std::find(lp.windows[i].begin(), lp.windows[i].end(), j) != lp.windows[i].end())
        lhs += sol.dual[i] / Rational(binomial(lp.n, j));
    }
    if (lhs < 1) throw std::logic_error("dual constraint violated");
  }
  if (dual_obj != sol.optimum) throw std::logic_error("duality gap in exact solve");

  // Uniqueness: columns with strictly negative reduced cost are pinned to
  // zero on the optimal face (complementary slackness with the dual above),
  // so probing each variable's extremes over the remaining columns decides
  // unique vs multiple exactly.
  std::vector<bool> frozen(total_cols, false);
  for (int j = 0; j < total_cols; ++j) frozen[j] = final_r[j] < 0;

  const Tableau at_optimum = tab;
  sol.uniqueness = Uniqueness::unique;
  for (int v = 0; v < tab.nvars && sol.uniqueness == Uniqueness::unique; ++v) {
    for (int sign = 0; sign < 2; ++sign) {
      Tableau probe = at_optimum;
      std::vector<Rational> probe_cost(total_cols, Rational(0));
      probe_cost[v] = sign == 0 ? 1 : -1;
      optimize(probe, probe_cost, frozen);
      std::vector<Rational> x = structural_solution(probe);
      if (x[v] != sol.profile.counts[v]) {
        sol.uniqueness = Uniqueness::multiple;
        sol.alt_profile.counts = std::move(x);
        break;
      }
    }
  }
  return sol;
}

Rational solve_lp_vertex_enum(const LinearProgram& lp) {
  const int nvars = lp.n + 1;
  if (nvars > 12) throw std::length_error("vertex enumeration guarded at <= 12 variables");

  // constraint list: a.x <= rhs (windows, boxes, -x_j <= 0)
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  for (const Window& w : lp.windows) {
    std::vector<Rational> row(nvars, Rational(0));
    for (int j : w) row[j] = Rational(1, BigInt(binomial(lp.n, j)));
    a.push_back(std::move(row));
    rhs.push_back(1);
  }
  for (int j = 0; j < nvars; ++j) {
    std::vector<Rational> row(nvars, Rational(0));
    row[j] = 1;
    a.push_back(std::move(row));
    rhs.push_back(Rational(lp.box[j]));
  }
  for (int j = 0; j < nvars; ++j) {
    std::vector<Rational> row(nvars, Rational(0));
    row[j] = -1;
    a.push_back(std::move(row));
    rhs.push_back(0);
  }

  const int m = static_cast<int>(a.size());
  std::vector<int> pick(nvars);
  std::iota(pick.begin(), pick.end(), 0);
  bool found = false;
  Rational best = 0;

  auto feasible = [&](const std::vector<Rational>& x) {
    for (int i = 0; i < m; ++i) {
      Rational dot = 0;
      for (int j = 0; j < nvars; ++j) dot += a[i][j] * x[j];
      if (dot > rhs[i]) return false;
    }
    return true;
  };

  for (;;) {
    // solve the square system picked rows . x = rhs via Gaussian elimination
    std::vector<std::vector<Rational>> mat(nvars, std::vector<Rational>(nvars + 1));
    for (int i = 0; i < nvars; ++i) {
      for (int j = 0; j < nvars; ++j) mat[i][j] = a[pick[i]][j];
      mat[i][nvars] = rhs[pick[i]];
    }
    bool singular = false;
    for (int colv = 0; colv < nvars && !singular; ++colv) {
      int pr = -1;
      for (int i = colv; i < nvars; ++i)
        if (mat[i][colv] != 0) {
          pr = i;
          break;
        }
      if (pr < 0) {
        singular = true;
        break;
      }
      std::swap(mat[colv], mat[pr]);
      Rational inv = Rational(1) / mat[colv][colv];
      for (auto& v : mat[colv]) v *= inv;
      for (int i = 0; i < nvars; ++i) {
        if (i == colv || mat[i][colv] == 0) continue;
        Rational f = mat[i][colv];
        for (int j = colv; j <= nvars; ++j) mat[i][j] -= f * mat[colv][j];
      }
    }
    if (!singular) {
      std::vector<Rational> x(nvars);
      for (int i = 0; i < nvars; ++i) x[i] = mat[i][nvars];
      if (feasible(x)) {
        Rational value = objective_value(x);
        if (!found || value > best) {
          best = value;
          found = true;
        }
      }
    }
    // next combination of rows
    int idx = nvars - 1;
    while (idx >= 0 && pick[idx] == m - nvars + idx) --idx;
    if (idx < 0) break;
    ++pick[idx];
    for (int i = idx + 1; i < nvars; ++i) pick[i] = pick[i - 1] + 1;
  }
  if (!found) throw std::logic_error("no feasible vertex found (x = 0 is always feasible)");
  return best;
}

Rational lp_closed_form_jk(int n, int p, int q) {
  std::vector<Window> classes = window_sets_pq(n, p, q);
  std::vector<bool> covered(n + 1, false);
  BigInt total = 0;
  for (const Window& cls : classes) {
    BigInt best = 0;
    for (int j : cls) {
      covered[j] = true;
      best = std::max(best, binomial(n, j));
    }
    total += best;
  }
  for (int j = 0; j <= n; ++j)
    if (!covered[j]) total += binomial(n, j);
  return Rational(total);
}

Distance1Report distance1_level_bound(const SetFamily& family) {
  Distance1Report report;
  VerificationReport check =
      verify_family(family, ConflictPredicate::exact_distance(1), VerifyStrategy::pairwise);
  report.family_valid = check.valid;
  if (!check.valid) {
    report.violations = std::move(check.violations);
    return report;
  }
  const int n = family.n();
  LevelProfile profile = profile_of(family);
  report.pass = true;
  for (int i = 0; i < n; ++i) {
    LevelBoundRow row;
    row.level = i;
    row.members = numerator(profile.counts[i]);
    row.lhs = BigInt(n - i) * row.members;
    row.rhs = binomial(n, i + 1);
    row.pass = row.lhs <= row.rhs;
    if (!row.pass) report.pass = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

AtMostKReport atmostk_weight_bound(const SetFamily& family, int k) {
  if (k < 0) throw std::invalid_argument("distance bound needs k >= 0");
  AtMostKReport report;
  VerificationReport check =
      verify_family(family, ConflictPredicate::at_most_distance(k), VerifyStrategy::pairwise);
  report.family_valid = check.valid;
  report.bound = binomial(family.n(), family.n() / 2);
  if (!check.valid) {
    report.violations = std::move(check.violations);
    return report;
  }
  for (SubsetWord w : family.members()) report.weight += binomial(card(w), k);
  report.pass = report.weight <= report.bound;
  return report;
}

}  // namespace tiltcube
