#include "a1c/comb.hpp"

#include <algorithm>

namespace a1c {

void validate(const CombData& comb) {
  if (comb.n < 1) throw Error("comb needs n >= 1");
  if (comb.genus < 0) throw Error("comb genus must be nonnegative");
  if (comb.teeth.size() != comb.m)
    throw Error("comb has " + std::to_string(comb.teeth.size()) + " teeth but m = " +
                std::to_string(comb.m));
  if (comb.handle_normal_degrees.size() != comb.n)
    throw Error("handle_normal_degrees must have length n");
  for (const Vec& c : comb.teeth) {
    if (c.size() != comb.n) throw Error("tooth " + to_string(c) + " must have length n");
    if (std::any_of(c.begin(), c.end(), [](const Integer& x) { return x < 0; }))
      throw Error("tooth " + to_string(c) + " has a negative contact");
    if (is_zero(c)) throw Error("tooth with trivial contact");
  }
  if (comb.c_infty) {
    if (comb.c_infty->size() != comb.n) throw Error("c_infty must have length n");
    Vec derived = comb.handle_normal_degrees;
    for (const Vec& c : comb.teeth) derived = add(derived, c);
    if (derived != *comb.c_infty)
      throw Error("prescribed c_infty " + to_string(*comb.c_infty) +
                  " contradicts the degree identity, which gives " + to_string(derived));
  }
}

MonoidDiagram build_system(const CombData& comb) {
  validate(comb);
  const std::size_t n = comb.n;
  MonoidDiagram d;
  d.add_object(FsMonoid::free(n));
  for (const Vec& c : comb.teeth) {
    std::size_t k = d.add_object(FsMonoid::free(n + 1));
    IntMatrix phi(n + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
      phi(j, j) = 1;
      phi(n, j) = c[j];
    }
    d.add_arrow(0, k, phi);
  }
  return d;
}

MinimalMonoidResult minimal_monoid(const CombData& comb) {
  const std::size_t n = comb.n;
  ColimitResult c = fs_colimit(build_system(comb));
  MinimalMonoidResult out;
  out.monoid = c.colimit;
  out.group_torsion = c.group_torsion;
  out.admissible = true;
  const std::size_t r = out.monoid.ambient_rank();
  for (std::size_t i = 1; i < c.structure_maps.size(); ++i) {
    const IntMatrix& s = c.structure_maps[i].matrix();
    IntMatrix chi(r, n), theta(r, 1);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t j = 0; j < n; ++j) chi(a, j) = s(a, j);
      theta(a, 0) = s(a, n);
    }
    out.chi_maps.emplace_back(FsMonoid::free(n), out.monoid, chi);
    out.theta_maps.emplace_back(FsMonoid::free(1), out.monoid, theta);
    out.admissible = out.admissible && zero_preimage_trivial(out.chi_maps.back()) &&
                     zero_preimage_trivial(out.theta_maps.back());
  }
  return out;
}

std::string to_string(LiftVerdict v) {
  switch (v) {
    case LiftVerdict::lifts: return "LIFTS";
    case LiftVerdict::degree_consistent_only: return "DEGREE_CONSISTENT_ONLY";
    case LiftVerdict::fails: return "FAILS";
  }
  return "FAILS";
}

LiftResult lift_contact_vector(const CombData& comb) {
  validate(comb);
  LiftResult out;
  out.c_infty = comb.handle_normal_degrees;
  for (const Vec& c : comb.teeth) out.c_infty = add(out.c_infty, c);
  bool nonneg = std::all_of(out.c_infty.begin(), out.c_infty.end(),
                            [](const Integer& x) { return x >= 0; });
  if (!nonneg)
    out.verdict = LiftVerdict::fails;
  else if (comb.genus == 0)
    out.verdict = LiftVerdict::lifts;
  else
    out.verdict = LiftVerdict::degree_consistent_only;
  out.a1_curve = out.verdict == LiftVerdict::lifts && !is_zero(out.c_infty);
  return out;
}

FreenessReport center_freeness(const std::vector<Vec>& contact_orders, const FsMonoid& P) {
  Cone allowed = dual(P.cone());
  for (const Vec& co : contact_orders) {
    if (co.size() != P.ambient_rank())
      throw Error("contact order " + to_string(co) + " has wrong length");
    if (!allowed.contains(co))
      throw Error("not an admissible contact order: " + to_string(co));
  }
  SpanReport s = span_report(contact_orders, P.ambient_rank());
  return {s.spans_rationally, s.spans_lattice, s.index};
}

SmoothingProfile smoothing_profile(const CombData& comb) {
  validate(comb);
  SmoothingProfile out;
  out.rank = comb.n;
  out.transform_degree = -Integer(comb.m);
  out.spanning = rank(comb.teeth, comb.n) == comb.n;
  return out;
}

}  // namespace a1c
