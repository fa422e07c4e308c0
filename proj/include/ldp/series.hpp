#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldp/monomials.hpp"
#include "ldp/rational.hpp"
#include "ldp/weights.hpp"

namespace ldp {

// Numeric audit of the one-parameter family (2, 2k+1, 2k+1, 4k+1) with
// d = 8k+4: every intersection number, multiplicity bound and coefficient
// bound used to prove that the family has a tiger and a Kaehler-Einstein
// metric is recomputed here in exact arithmetic for concrete k.
//
// Cast of characters: C = X /\ (x0 = 0) splits into four branches
// C_1..C_4 through the vertex P3 = (0:0:0:1) of index 4k+1; a divisor
// D ~ -K_X decomposes as D' + sum a_i C_i; the four remaining singular
// points P_a of index 2k+1 sit over the roots of g4.

inline WeightVector series_weights(Weight k) {
  if (k < 1) throw std::invalid_argument("series parameter must be >= 1");
  return validate_weights(2, 2 * k + 1, 2 * k + 1, 4 * k + 1);
}

struct SeriesEquationTerm {
  std::string label;
  ExponentVector monomial;  // one representative of the term family
  Weight degree;
};

// The five monomial families spanning the equation of a series member.
inline std::vector<SeriesEquationTerm> series_equation_terms(Weight k) {
  WeightVector w = series_weights(k);
  std::vector<SeriesEquationTerm> terms;
  auto add = [&](std::string label, ExponentVector e) {
    terms.push_back({std::move(label), e, e.weighted_degree(w)});
  };
  add("x0^(4k+2)", ExponentVector{{4 * k + 2, 0, 0, 0}});
  add("x3^2*x0", ExponentVector{{1, 0, 0, 2}});
  add("x3*(x1+x2)*x0^(k+1)", ExponentVector{{k + 1, 1, 0, 1}});
  add("g4(x1,x2)", ExponentVector{{0, 4, 0, 0}});
  add("g2(x1,x2)*x0^(2k+1)", ExponentVector{{2 * k + 1, 2, 0, 0}});
  return terms;
}

struct SeriesIntersections {
  Rational ci_cj;  // (C_i . C_j), i != j
  Rational ci_o1;  // (C_i . O(1))
  Rational ci_ci;  // (C_i . C_i)
};

inline SeriesIntersections series_intersection_numbers(Weight k) {
  WeightVector w = series_weights(k);
  SeriesIntersections s;
  s.ci_cj = Rational(1, 4 * k + 1);
  s.ci_o1 = Rational(1, (2 * k + 1) * (4 * k + 1));
  // C ~ O(2)|_X (x0 has weight 2), so (C_i.C_i) = (C_i.O(2)) - 3 (C_i.C_j)
  s.ci_ci = Rational(2) * s.ci_o1 - Rational(3) * s.ci_cj;
  assert(s.ci_ci == Rational(-(6 * k + 1), (2 * k + 1) * (4 * k + 1)));
  // the four branches exhaust C: sum_i (C_i.O(1)) = (O(2).O(1))
  assert(Rational(4) * s.ci_o1 == intersection_degree(w, 2, 1));
  return s;
}

struct SeriesLcChain {
  Rational smooth_mult_bound;  // mult_P D <= (D.F), F in |O(2(2k+1))|
  bool smooth_bound_ok;        // < 1
  Rational p3_mult_bound;      // mult at the chart over P3; always 2
  Rational ai_bound;           // coefficient bound for the branches C_i
  Rational dprime_bound;       // residual multiplicity over P3
  Rational lc_total;           // ai_bound + dprime_bound, want < 1
  bool lc_inequality_holds;
};

// The chain of estimates showing (X, D) is log canonical at P3 for every
// D ~ -K_X.  The final inequality genuinely fails at k=1 (37/30 > 1); the
// caller is expected to flag that case rather than hide it.
inline SeriesLcChain series_lc_chain(Weight k) {
  WeightVector w = series_weights(k);
  SeriesLcChain c;

  c.smooth_mult_bound = intersection_degree(w, 1, 2 * (2 * k + 1));
  assert(c.smooth_mult_bound == Rational(4, 4 * k + 1));
  c.smooth_bound_ok = c.smooth_mult_bound < Rational(1);

  c.p3_mult_bound =
      Rational(4 * k + 1, 2) * intersection_degree(w, 1, 2 * (2 * k + 1));
  assert(c.p3_mult_bound == Rational(2));

  // pairing D with one branch:  1 = -(6k+1) a_i + (sum_{j!=i} a_j)(2k+1)
  //                                 + (2k+1)(4k+1)(C_i.D')
  // bounded via sum a_j <= 2 - a_i and (C_i.D') <= (D.O(2)) gives
  //   1 <= -(6k+1) a_i + (2 - a_i)(2k+1) + 4,  so  a_i <= (4k+5)/(8k+2).
  c.ai_bound = Rational(4 * k + 5, 8 * k + 2);
  assert(c.ai_bound == Rational(1, 2) + Rational(2, 4 * k + 1));
  // substituting the bound turns the estimate into an equality
  {
    Rational rhs = Rational(-(6 * k + 1)) * c.ai_bound +
                   (Rational(2) - c.ai_bound) * Rational(2 * k + 1) +
                   Rational(4);
    assert(rhs == Rational(1));
    (void)rhs;
  }

  c.dprime_bound = Rational(4 * k + 1, 4) * intersection_degree(w, 1, 2);
  assert(c.dprime_bound == Rational(1, 2 * k + 1));

  c.lc_total = c.ai_bound + c.dprime_bound;
  assert(c.lc_total ==
         Rational(1, 2) + Rational(2, 4 * k + 1) + Rational(1, 2 * k + 1));
  c.lc_inequality_holds = c.lc_total < Rational(1);
  return c;
}

// Multiplicity of the pullback of (1/2)C at the chart over P3: four branches
// with coefficient 1/2 give 2, which breaks the klt multiplicity test
// (> 1), so (1/2)C is a tiger on every series member.
inline Rational series_tiger_witness(Weight k) {
  WeightVector w = series_weights(k);
  SeriesIntersections s = series_intersection_numbers(k);
  // degree check: (1/2)C ~ -K_X, i.e. ((1/2)C.O(1)) = (O(1).O(1))
  assert(Rational(1, 2) * Rational(4) * s.ci_o1 ==
         intersection_degree(w, 1, 1));
  (void)s;
  Rational mult = Rational(4) * Rational(1, 2);
  assert(mult > Rational(1));
  return mult;
}

struct SeriesSingularPoints {
  Weight p3_index;           // 4k+1
  int pa_count;              // four roots of g4 (no multiple roots)
  Weight pa_index;           // 2k+1
  Rational pa_dprime_bound;  // pullback multiplicity budget at each P_a
};

inline SeriesSingularPoints series_singular_points(Weight k) {
  WeightVector w = series_weights(k);
  SeriesSingularPoints p;
  p.p3_index = 4 * k + 1;
  p.pa_count = 4;
  p.pa_index = 2 * k + 1;
  p.pa_dprime_bound =
      Rational(2 * k + 1, 4) * intersection_degree(w, 1, 2);
  assert(p.pa_dprime_bound == Rational(1, 4 * k + 1));
  return p;
}

struct SeriesReport {
  Weight k = 0;
  WeightVector w;
  std::vector<SeriesEquationTerm> equation_terms;
  SeriesIntersections intersections;
  SeriesLcChain lc;
  Rational tiger_witness_mult;
  SeriesSingularPoints singular_points;
};

inline SeriesReport series_report(Weight k) {
  SeriesReport r;
  r.k = k;
  r.w = series_weights(k);
  r.equation_terms = series_equation_terms(k);
  r.intersections = series_intersection_numbers(k);
  r.lc = series_lc_chain(k);
  r.tiger_witness_mult = series_tiger_witness(k);
  r.singular_points = series_singular_points(k);
  return r;
}

}  // namespace ldp
