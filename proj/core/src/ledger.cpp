#include "o2est/ledger.hpp"

#include <array>
#include <functional>
#include <map>
#include <sstream>

#include "o2est/matrix.hpp"  // for InputError

namespace o2est {

namespace {

using Status = LedgerEntry::Status;

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Track the worst (smallest-slack) lhs/rhs pair over a parameter sweep.
// A failing pair, once seen, pins the record.
struct WorstCase {
  bool any = false;
  bool all_pass = true;
  bool pinned_fail = false;
  IntervalScalar lhs, rhs;
  std::string binding;

  void update(const IntervalScalar& l, const IntervalScalar& r,
              const std::string& where) {
    bool pass = certainly_leq(l, r);
    if (!pass) all_pass = false;
    if (pinned_fail) return;
    Rational s = r.lo() - l.hi();
    if (!any || !pass || s < rhs.lo() - lhs.hi()) {
      any = true;
      lhs = l;
      rhs = r;
      binding = where;
      pinned_fail = !pass;
    }
  }

  void finalize(LedgerEntry& e, Status pass_status = Status::Pass) const {
    e.status = all_pass ? pass_status : Status::Fail;
    e.lhs = lhs;
    e.rhs = rhs;
    e.slack = rhs - lhs;
    if (!binding.empty()) e.note += " worst at " + binding + ".";
  }
};

IntervalScalar sqrt2() { return sqrt_enclosure(Rational(2)); }
IntervalScalar sqrt3() { return sqrt_enclosure(Rational(3)); }
IntervalScalar sqrt6() { return sqrt_enclosure(Rational(6)); }

// --- individual entries ------------------------------------------------------

LedgerEntry entry_l01() {
  LedgerEntry e;
  e.id = "L0.1";
  e.description =
      "(1-d)^(1/2) >= 1-d on [0,1], squared form (1-d) >= (1-d)^2, "
      "i.e. d(1-d) >= 0";
  e.anchor = "Lemma 0.1 proof";
  // Squared reduction is exact in rationals: (1-d) - (1-d)^2 = d(1-d).
  // Verify the factorization identity on a grid and nonnegativity of the
  // factored form (both factors in [0,1]).
  WorstCase w;
  for (int i = 0; i <= 64; ++i) {
    Rational d(i, 64);
    Rational left = (1 - d) * (1 - d);
    Rational right = 1 - d;
    Rational factored = d * (1 - d);
    if (right - left != factored) {
      w.all_pass = false;
    }
    w.update(IntervalScalar(left), IntervalScalar(right), "d=" + rat_str(d));
  }
  e.note = "symbolic: (1-d)-(1-d)^2 = d(1-d), both factors >= 0 on [0,1];";
  w.finalize(e);
  return e;
}

LedgerEntry entry_l112_aggregate() {
  LedgerEntry e;
  e.id = "L1.12-aggregate";
  e.description = "sqrt2 + (sqrt2+sqrt4) + (sqrt2+sqrt4+sqrt6) <= 11";
  e.anchor = "Lemma 1.12 proof";
  IntervalScalar lhs = sqrt2() + (sqrt2() + IntervalScalar(2)) +
                       (sqrt2() + IntervalScalar(2) + sqrt6());
  IntervalScalar rhs(Rational(11));
  e.lhs = lhs;
  e.rhs = rhs;
  e.slack = rhs - lhs;
  e.status = certainly_leq(lhs, rhs) ? Status::Pass : Status::Fail;
  return e;
}

LedgerEntry entry_p413_chain() {
  LedgerEntry e;
  e.id = "P4.13-chain";
  e.description =
      "for sampled (eps, M) there is rational eps0 with "
      "2*eps0 + 11*sqrt(M + 3*eps0) <= eps + 11*sqrt(M)";
  e.anchor = "Proposition 4.13 proof";
  const std::array<Rational, 3> epses = {Rational(1, 2), Rational(1, 10),
                                         Rational(1, 100)};
  const std::array<Rational, 5> ms = {Rational(0), Rational(1, 100),
                                      Rational(1, 4), Rational(1), Rational(2)};
  WorstCase w;
  for (const auto& eps : epses) {
    for (const auto& m : ms) {
      Rational eps0 = eps / 4;
      bool found = false;
      IntervalScalar lhs, rhs;
      for (int halvings = 0; halvings < 200; ++halvings) {
        lhs = IntervalScalar(2 * eps0) +
              IntervalScalar(11) * sqrt_enclosure(Rational(m + 3 * eps0));
        rhs = IntervalScalar(eps) +
              IntervalScalar(11) * sqrt_enclosure(Rational(m));
        if (certainly_leq(lhs, rhs)) {
          found = true;
          break;
        }
        eps0 /= 2;
      }
      if (!found) w.all_pass = false;
      w.update(lhs, rhs,
               "eps=" + rat_str(eps) + ",M=" + rat_str(m) +
                   ",eps0=" + rat_str(eps0));
    }
  }
  w.finalize(e);
  return e;
}

LedgerEntry entry_l55_recursion() {
  LedgerEntry e;
  e.id = "L5.5-recursion";
  e.description =
      "per-step pieces 2e + 91rh + (90/n')rT (middle) and "
      "3e + 91rh + (45/n')(rT + d0) (final) stay below "
      "91rh + (90/n')d0 under the proof's choice of e";
  e.anchor = "Lemma 5.5 proof";
  const std::array<long, 3> nprimes = {4, 8, 360};
  const std::array<Rational, 2> rhs_ = {Rational(1, 100), Rational(1, 2)};
  const std::array<Rational, 2> rts = {Rational(0), Rational(1, 10)};
  const std::array<Rational, 2> gaps = {Rational(1, 10), Rational(1)};
  WorstCase w;
  for (long np : nprimes) {
    for (const auto& rh : rhs_) {
      for (const auto& rt : rts) {
        for (const auto& gap : gaps) {
          Rational d0 = rt + gap;
          Rational lim = rh < gap ? rh : gap;  // min(rho(h), d0 - rho(T))
          Rational eps = lim / (2 * (2 * np + 1));  // any eps < lim/(2n'+1)
          Rational bound = 91 * rh + Rational(90, np) * d0;
          Rational middle = 2 * eps + 91 * rh + Rational(90, np) * rt;
          Rational final_ = 3 * eps + 91 * rh + Rational(45, np) * (rt + d0);
          std::string where = "n'=" + std::to_string(np) + ",rh=" +
                              rat_str(rh) + ",rT=" + rat_str(rt) +
                              ",d0=" + rat_str(d0);
          w.update(IntervalScalar(middle), IntervalScalar(bound),
                   where + " (middle)");
          w.update(IntervalScalar(final_), IntervalScalar(bound),
                   where + " (final)");
        }
      }
    }
  }
  w.finalize(e);
  return e;
}

LedgerEntry entry_l56_dk() {
  LedgerEntry e;
  e.id = "L5.6-dk";
  e.description =
      "induction d_k <= 2^(-k+1)*91*rho(1) under d_{k+1} = "
      "91*rho(1/N_{k+1}) + d_k/4, rho(1/N_k) <= 2^(-k)*rho(1)";
  e.anchor = "Lemma 5.6 proof";
  WorstCase w;
  for (const Rational& rho1 : {Rational(1), Rational(3, 7)}) {
    Rational dk = 91 * rho1;  // d_0
    Rational pow2 = 1;        // 2^(-k)
    for (int k = 0; k <= 40; ++k) {
      Rational bound = 2 * 91 * rho1 * pow2;  // 2^(-k+1)*91*rho(1)
      w.update(IntervalScalar(dk), IntervalScalar(bound),
               "k=" + std::to_string(k) + ",rho1=" + rat_str(rho1));
      pow2 /= 2;
      dk = 91 * rho1 * pow2 + dk / 4;  // worst-case rho at level k+1
    }
  }
  e.note = "90/n' = 90/360 = 1/4 exactly;";
  w.finalize(e);
  return e;
}

LedgerEntry entry_l56_telescope() {
  LedgerEntry e;
  e.id = "L5.6-telescope";
  e.description =
      "sum_{s>=k} (3 d_s + 2 n' d_{s+1}) with d_s <= 182*rho(1)*2^(-s), "
      "n'=360, evaluates to 132132*rho(1)*2^(-k) <= 133000*rho(1)*2^(-k)";
  e.anchor = "Lemma 5.6 proof";
  // geometric sums, exact: sum_{s=k}^inf 2^{-s} = 2^{-k+1}
  // 3*182*2^{-k+1} + 2*360*182*2^{-k} = (1092 + 131040)*2^{-k}
  Rational coeff = Rational(3 * 182) * 2 + Rational(2 * 360) * 182;
  e.lhs = IntervalScalar(coeff);
  e.rhs = IntervalScalar(Rational(133000));
  e.slack = e.rhs - e.lhs;
  e.status = certainly_leq(e.lhs, e.rhs) ? Status::Pass : Status::Fail;
  e.note = "coefficient on rho(1)*2^(-k): " + rat_str(coeff) + ";";
  return e;
}

LedgerEntry entry_t510_m() {
  LedgerEntry e;
  e.id = "T5.10-M";
  e.description =
      "n := ceil(181^beta) satisfies 181*n^(-(1-alpha/2)) <= 1, and "
      "M(alpha) = 11*181*5*(181^beta+1)/(1-181^(-alpha*beta/2)) is a "
      "finite positive interval, for alpha in {1/4, 1/2, 1}";
  e.anchor = "Theorem 5.10 proof";
  // alpha, beta = 1/(1-alpha/2) as exact fractions: (1/4 -> 8/7),
  // (1/2 -> 4/3), (1 -> 2)
  struct Case {
    Rational alpha;
    long beta_num, beta_den;
  };
  const std::array<Case, 3> cases = {Case{Rational(1, 4), 8, 7},
                                     Case{Rational(1, 2), 4, 3},
                                     Case{Rational(1), 2, 1}};
  WorstCase w;
  std::ostringstream note;
  for (const auto& c : cases) {
    // identity beta*(1-alpha/2) = 1, exactly
    Rational beta(c.beta_num, c.beta_den);
    if (beta * (1 - c.alpha / 2) != 1) {
      w.all_pass = false;
    }
    // 181^beta enclosure: (181^beta_num)^(1/beta_den)
    BigInt p = boost::multiprecision::pow(BigInt(181),
                                          static_cast<unsigned>(c.beta_num));
    IntervalScalar b181 = root_enclosure(Rational(p),
                                         static_cast<unsigned>(c.beta_den));
    // smallest integer n >= 181^beta, certified by exact power comparison
    BigInt n = boost::multiprecision::numerator(b181.hi()) /
               boost::multiprecision::denominator(b181.hi());
    while (boost::multiprecision::pow(n, static_cast<unsigned>(c.beta_den)) <
           p)
      ++n;
    // the lemma's step: 181 * n^{-(1-alpha/2)} <= 1  <=>  n^beta_den >= 181^beta_num
    bool step = boost::multiprecision::pow(
                    n, static_cast<unsigned>(c.beta_den)) >= p;
    if (!step) w.all_pass = false;
    // M(alpha): 181^(alpha*beta/2) as an exact-fraction power
    Rational abh = c.alpha * beta / 2;
    unsigned abh_num =
        boost::multiprecision::numerator(abh).convert_to<unsigned>();
    unsigned abh_den =
        boost::multiprecision::denominator(abh).convert_to<unsigned>();
    BigInt p2 = boost::multiprecision::pow(BigInt(181), abh_num);
    IntervalScalar pos_pow = root_enclosure(Rational(p2), abh_den);
    IntervalScalar denom = IntervalScalar(1) - IntervalScalar(1) / pos_pow;
    IntervalScalar m_alpha = IntervalScalar(Rational(11 * 181 * 5)) *
                             (b181 + IntervalScalar(1)) / denom;
    bool mfinite = m_alpha.lo() > 0;
    if (!mfinite) w.all_pass = false;
    note << " alpha=" << rat_str(c.alpha) << ": n=" << n
         << ", M in [" << m_alpha.lo_d() << ", " << m_alpha.hi_d() << "];";
    // record the step inequality as the lhs/rhs pair
    w.update(IntervalScalar(Rational(p)),
             IntervalScalar(Rational(boost::multiprecision::pow(
                 n, static_cast<unsigned>(c.beta_den)))),
             "alpha=" + rat_str(c.alpha));
  }
  e.note = note.str();
  w.finalize(e);
  return e;
}

LedgerEntry entry_r511() {
  LedgerEntry e;
  e.id = "R5.11";
  e.description =
      "46/45-recursion d_k <= 92*C1*n^(-k/2) with n = 8100 "
      "(sqrt(n) = 90 exact), and 320*92 <= 30000";
  e.anchor = "Remark 5.11";
  WorstCase w;
  // recursion with C1 = 1
  Rational dk = 46;    // d_0 = 46*C1
  Rational root = 1;   // n^(-k/2) = 90^(-k)
  for (int k = 0; k <= 40; ++k) {
    w.update(IntervalScalar(dk), IntervalScalar(92 * root),
             "k=" + std::to_string(k));
    root /= 90;
    dk = 46 * root + Rational(45, 8100) * dk;
  }
  w.update(IntervalScalar(Rational(320 * 92)),
           IntervalScalar(Rational(30000)), "320*92=29440");
  e.note = "sqrt(8100) = 90 exact;";
  w.finalize(e);
  return e;
}

LedgerEntry entry_l65_xi_chain(bool refined_pi) {
  LedgerEntry e;
  e.id = "L6.5-xi-chain";
  e.description =
      "xi-vector bound chain: (pi*n*m/(2n+1)^2)*sqrt((n-1)/2)*sqrt(3/(2n)) "
      "<= (pi*sqrt3/4)*(m/(2n+1)) for all n; the z-side identity; "
      "pi*sqrt3/4 <= 3/2; and 2*sqrt3*(1+1/(2n)) <= 7/2 iff n >= 49";
  e.anchor = "Lemma 6.5 proof";
  WorstCase w;
  std::ostringstream note;

  // (a) y-side comparison reduces to 4n(n-1) <= (2n+1)^2 for all n >= 0:
  // difference is 8n+1, positive coefficients.  Spot-check a grid exactly.
  note << " y-side: (2n+1)^2 - 4n(n-1) = 8n+1 > 0 symbolically;";
  for (long n : {1L, 2L, 3L, 10L, 49L, 1000L}) {
    Rational lhs = Rational(4) * n * (n - 1);
    Rational rhs = Rational(2 * n + 1) * (2 * n + 1);
    w.update(IntervalScalar(lhs), IntervalScalar(rhs),
             "y-side n=" + std::to_string(n));
  }

  // (b) z-side identity: (m*sqrt(2/n)*sqrt(3/(2n)))^2 == 3 m^2/n^2 ==
  // (2*sqrt3*(1+1/(2n))*m/(2n+1))^2, exact in rationals.
  bool identity_ok = true;
  for (long n : {1L, 2L, 5L, 49L, 123L}) {
    Rational m = 1;
    Rational lhs2 = m * m * Rational(2, n) * Rational(3, 2 * n);
    Rational rhs2 = Rational(12) * m * m *
                    Rational((2 * n + 1) * (2 * n + 1), 4 * n * n) /
                    Rational((2 * n + 1) * (2 * n + 1));
    if (lhs2 != rhs2) identity_ok = false;
  }
  if (!identity_ok) w.all_pass = false;
  note << " z-side identity exact;";

  // (c) pi*sqrt(3)/4 <= 3/2
  IntervalScalar pi = refined_pi ? pi_refined() : pi_default();
  w.update(pi * sqrt3() / IntervalScalar(4), IntervalScalar(Rational(3, 2)),
           "pi*sqrt3/4 vs 3/2");

  // (d) threshold: 2*sqrt3*(1+1/(2n)) <= 7/2 holds at n=49, fails at n=48.
  // Squared: 12*(1+1/(2n))^2 vs 49/4, exact.
  auto zcoef2 = [](long n) {
    Rational f = 1 + Rational(1, 2 * n);
    return Rational(12) * f * f;
  };
  w.update(IntervalScalar(zcoef2(49)), IntervalScalar(Rational(49, 4)),
           "threshold n=49");
  bool fails_at_48 = !(zcoef2(48) <= Rational(49, 4));
  if (!fails_at_48) w.all_pass = false;
  note << " threshold first holds at n=49 (fails at n=48);";

  e.note = note.str();
  w.finalize(e, Status::Conditional);
  return e;
}

LedgerEntry entry_l65_quadform() {
  LedgerEntry e;
  e.id = "L6.5-quadform";
  e.description =
      "max over the simplex of (9/4)ab + (49/4)ac + 25bc <= 25/2, via "
      "exact edge parametrizations and the interior critical point";
  e.anchor = "Lemma 6.5 proof";
  // Edges (quadratic in one variable, exact vertex evaluation):
  //   a=0: 25*b*(1-b)      max 25/4 at b=1/2
  //   b=0: (49/4)*a*(1-a)  max 49/16 at a=1/2
  //   c=0: (9/4)*a*(1-a)   max 9/16 at a=1/2
  Rational best(0);
  std::string where = "vertices";
  auto consider = [&](const Rational& v, const std::string& loc) {
    if (v > best) {
      best = v;
      where = loc;
    }
  };
  consider(Rational(25, 4), "edge a=0, b=c=1/2");
  consider(Rational(49, 16), "edge b=0, a=c=1/2");
  consider(Rational(9, 16), "edge c=0, a=b=1/2");

  // Interior critical point: solve the 4x4 rational Lagrange system
  //   (9/4)b + (49/4)c - L = 0
  //   (9/4)a + 25c    - L = 0
  //   (49/4)a + 25b   - L = 0
  //   a + b + c           = 1
  std::array<std::array<Rational, 5>, 4> mtx = {{
      {Rational(0), Rational(9, 4), Rational(49, 4), Rational(-1), Rational(0)},
      {Rational(9, 4), Rational(0), Rational(25), Rational(-1), Rational(0)},
      {Rational(49, 4), Rational(25), Rational(0), Rational(-1), Rational(0)},
      {Rational(1), Rational(1), Rational(1), Rational(0), Rational(1)},
  }};
  // Gaussian elimination, exact.
  bool singular = false;
  for (int col = 0; col < 4 && !singular; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (mtx[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) {
      singular = true;
      break;
    }
    std::swap(mtx[col], mtx[piv]);
    for (int r = 0; r < 4; ++r) {
      if (r == col || mtx[r][col] == 0) continue;
      Rational f = mtx[r][col] / mtx[col][col];
      for (int c2 = col; c2 < 5; ++c2) mtx[r][c2] -= f * mtx[col][c2];
    }
  }
  if (!singular) {
    Rational a = mtx[0][4] / mtx[0][0];
    Rational b = mtx[1][4] / mtx[1][1];
    Rational c = mtx[2][4] / mtx[2][2];
    if (a >= 0 && b >= 0 && c >= 0) {
      Rational v = Rational(9, 4) * a * b + Rational(49, 4) * a * c +
                   Rational(25) * b * c;
      consider(v, "interior critical point");
    } else {
      e.note = "interior critical point leaves the simplex (a=" + rat_str(a) +
               ", b=" + rat_str(b) + ", c=" + rat_str(c) + ");";
    }
  }

  e.lhs = IntervalScalar(best);
  e.rhs = IntervalScalar(Rational(25, 2));
  e.slack = e.rhs - e.lhs;
  e.status = certainly_leq(e.lhs, e.rhs) ? Status::Pass : Status::Fail;
  e.note += " max = " + rat_str(best) + " at " + where + ";";
  return e;
}

LedgerEntry entry_t67_taylor() {
  LedgerEntry e;
  e.id = "T6.7-taylor";
  e.description =
      "(1-r)^(-1/2) < 1 + (1/2)(1+eps0) r on (0, delta0) for sampled "
      "eps0, with certified rational delta0";
  e.anchor = "Theorem 6.7 proof";
  // Squared form: f(r) = (1-r)(1+cr/2)^2 - 1 with c = 1+eps0, so
  // f(r)/r = eps0 + r(c^2/4 - c) - r^2 c^2/4 =: g(r).  For c < 4, g is
  // decreasing on r >= 0, so g > 0 on (0, delta0] iff g(delta0) > 0.
  WorstCase w;
  std::ostringstream note;
  for (const Rational& eps0 :
       {Rational(1), Rational(1, 10), Rational(1, 100)}) {
    Rational c = 1 + eps0;
    Rational cand = eps0 / (2 * c * (1 + c));
    Rational half(1, 2);
    Rational delta0 = cand < half ? cand : half;
    auto g = [&](const Rational& r) {
      return eps0 + r * (c * c / 4 - c) - r * r * c * c / 4;
    };
    // g decreasing needs c^2/4 - c < 0, i.e. c < 4
    if (!(c < 4)) w.all_pass = false;
    Rational gval = g(delta0);
    w.update(IntervalScalar(Rational(0)), IntervalScalar(gval),
             "eps0=" + rat_str(eps0) + ",delta0=" + rat_str(delta0));
    note << " eps0=" << rat_str(eps0) << ": delta0=" << rat_str(delta0)
         << ";";
  }
  e.note = "squared reduction (1-r)(1+cr/2)^2 > 1;" + note.str();
  w.finalize(e);
  return e;
}

LedgerEntry entry_c610_halving() {
  LedgerEntry e;
  e.id = "C6.10-halving";
  e.description =
      "|t1-t2| <= (1/4)|z1-z2| implies |t1-t2|^(1/2) <= "
      "(1/2)|z1-z2|^(1/2), by squaring";
  e.anchor = "Corollary 6.10 proof";
  // (2 sqrt(x))^2 = 4x <= y = (sqrt(y))^2 and sqrt is monotone.
  WorstCase w;
  const std::array<std::pair<Rational, Rational>, 4> samples = {
      std::pair<Rational, Rational>{Rational(1, 4), Rational(1)},
      {Rational(1, 100), Rational(1, 25)},
      {Rational(1, 8), Rational(1)},
      {Rational(0), Rational(1, 3)},
  };
  for (const auto& [x, y] : samples) {
    if (!(x <= y / 4)) {
      w.all_pass = false;
      continue;
    }
    w.update(IntervalScalar(4 * x), IntervalScalar(y),
             "x=" + rat_str(x) + ",y=" + rat_str(y));
  }
  e.note = "symbolic: squaring plus sqrt monotonicity;";
  w.finalize(e);
  return e;
}

LedgerEntry entry_l54_partition() {
  LedgerEntry e;
  e.id = "L5.4-partition";
  e.description =
      "accumulation (4(2r + 4r/21) + r/21) + 2r/21 + 2r/21 + r = 10r; "
      "ledger passes the chain as <=";
  e.anchor = "Lemma 5.4 proof";
  Rational inner = 4 * (Rational(2) + Rational(4, 21)) + Rational(1, 21);
  bool inner_ok = inner == Rational(8) + Rational(17, 21);
  Rational total = inner + Rational(2, 21) + Rational(2, 21) + 1;
  e.lhs = IntervalScalar(total);
  e.rhs = IntervalScalar(Rational(10));
  e.slack = e.rhs - e.lhs;
  e.status = (inner_ok && certainly_leq(e.lhs, e.rhs)) ? Status::Pass
                                                       : Status::Fail;
  e.note =
      "total is exactly 10r; strictness in the source comes from the "
      "strict component inequalities;";
  return e;
}

LedgerEntry entry_t69_composition() {
  LedgerEntry e;
  e.id = "T6.9-composition";
  e.description = "330000 * (25/4)^(1/2) = 825000 <= 840000";
  e.anchor = "Theorem 6.9";
  IntervalScalar lhs = IntervalScalar(Rational(330000)) *
                       sqrt_enclosure(Rational(25, 4));
  e.lhs = lhs;
  e.rhs = IntervalScalar(Rational(840000));
  e.slack = e.rhs - e.lhs;
  e.status = certainly_leq(e.lhs, e.rhs) ? Status::Pass : Status::Fail;
  e.note = "sqrt(25/4) = 5/2 exact;";
  return e;
}

LedgerEntry entry_c68() {
  LedgerEntry e;
  e.id = "C6.8";
  e.description = "11 * (25/4)^(1/2) = 27.5 <= 28";
  e.anchor = "Corollary 6.8";
  IntervalScalar lhs =
      IntervalScalar(Rational(11)) * sqrt_enclosure(Rational(25, 4));
  e.lhs = lhs;
  e.rhs = IntervalScalar(Rational(28));
  e.slack = e.rhs - e.lhs;
  e.status = certainly_leq(e.lhs, e.rhs) ? Status::Pass : Status::Fail;
  return e;
}

using EntryFn = std::function<LedgerEntry(bool)>;

const std::vector<std::pair<std::string, EntryFn>>& catalog() {
  static const std::vector<std::pair<std::string, EntryFn>> entries = {
      {"L0.1", [](bool) { return entry_l01(); }},
      {"L1.12-aggregate", [](bool) { return entry_l112_aggregate(); }},
      {"P4.13-chain", [](bool) { return entry_p413_chain(); }},
      {"L5.5-recursion", [](bool) { return entry_l55_recursion(); }},
      {"L5.6-dk", [](bool) { return entry_l56_dk(); }},
      {"L5.6-telescope", [](bool) { return entry_l56_telescope(); }},
      {"T5.10-M", [](bool) { return entry_t510_m(); }},
      {"R5.11", [](bool) { return entry_r511(); }},
      {"L6.5-xi-chain", [](bool rp) { return entry_l65_xi_chain(rp); }},
      {"L6.5-quadform", [](bool) { return entry_l65_quadform(); }},
      {"T6.7-taylor", [](bool) { return entry_t67_taylor(); }},
      {"C6.10-halving", [](bool) { return entry_c610_halving(); }},
      {"L5.4-partition", [](bool) { return entry_l54_partition(); }},
      {"T6.9-composition", [](bool) { return entry_t69_composition(); }},
      {"C6.8", [](bool) { return entry_c68(); }},
  };
  return entries;
}

}  // namespace

std::vector<std::string> ledger_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : catalog()) ids.push_back(id);
  return ids;
}

LedgerEntry verify_entry(const std::string& id, bool refined_pi) {
  for (const auto& [eid, fn] : catalog())
    if (eid == id) return fn(refined_pi);
  throw InputError("unknown ledger entry id: " + id);
}

std::vector<LedgerEntry> verify_all_entries(bool refined_pi) {
  std::vector<LedgerEntry> out;
  for (const auto& [id, fn] : catalog()) out.push_back(fn(refined_pi));
  return out;
}

const char* to_string(LedgerEntry::Status s) {
  switch (s) {
    case LedgerEntry::Status::Pass:
      return "pass";
    case LedgerEntry::Status::Fail:
      return "fail";
    case LedgerEntry::Status::Conditional:
      return "conditional";
  }
  return "fail";
}

}  // namespace o2est
