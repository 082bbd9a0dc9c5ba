#include "a1c/dfchart.hpp"

#include <utility>

namespace a1c {

DFChart::DFChart(FsMonoid P, std::size_t pic_rank, IntMatrix L)
    : P_(std::move(P)), pic_rank_(pic_rank), L_(std::move(L)) {
  if (L_.rows() != pic_rank_ || L_.cols() != P_.ambient_rank())
    throw Error("chart matrix must be " + std::to_string(pic_rank_) + "x" +
                std::to_string(P_.ambient_rank()));
  if (!P_.is_sharp()) throw Error("chart monoid is not sharp");
  if (!P_.is_saturated()) throw Error("chart monoid is not saturated");
  dual_ = dual(P_.cone());
}

Vec contact_order(const DFChart& chart, const CurveClass& F) {
  if (F.size() != chart.pic_rank())
    throw Error("curve class has length " + std::to_string(F.size()) + ", expected " +
                std::to_string(chart.pic_rank()));
  return chart.L().transpose().apply(F);
}

bool is_admissible(const DFChart& chart, const CurveClass& F) {
  return chart.dual_cone().contains(contact_order(chart, F));
}

std::vector<AdmissibleClass> enumerate_admissible(const DFChart& chart,
                                                  const Cone& effective_cone,
                                                  const Vec& height,
                                                  const Integer& bound) {
  if (effective_cone.ambient_rank() != chart.pic_rank())
    throw Error("effective cone does not live in the curve class lattice");
  std::vector<AdmissibleClass> out;
  for (Vec& F : enumerate_bounded(effective_cone, height, bound)) {
    Vec co = contact_order(chart, F);
    if (chart.dual_cone().contains(co)) out.push_back({std::move(F), std::move(co)});
  }
  return out;
}

}  // namespace a1c
