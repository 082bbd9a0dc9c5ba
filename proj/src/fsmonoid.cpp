#include "a1c/fsmonoid.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace a1c {

namespace {

std::vector<Vec> clean(std::size_t n, std::vector<Vec> gens) {
  std::vector<Vec> out;
  for (Vec& g : gens) {
    if (g.size() != n)
      throw Error("monoid generator " + to_string(g) + " has wrong length");
    if (!is_zero(g)) out.push_back(std::move(g));
  }
  canonicalize(out);
  return out;
}

bool in_span_of_lineality(const Cone& c, const Vec& v) {
  for (const Vec& f : c.facets())
    if (dot(f, v) != 0) return false;
  for (const Vec& e : c.equations())
    if (dot(e, v) != 0) return false;
  return true;
}

// Generators lying in the lineality space generate the unit group; it is the
// whole lattice of the lineality space iff its index there is 1.
bool units_saturated(const FsMonoid& m) {
  std::size_t u = m.cone().lineality_basis().size();
  std::vector<Vec> in_lin;
  for (const Vec& g : m.generators())
    if (in_span_of_lineality(m.cone(), g)) in_lin.push_back(g);
  if (in_lin.empty()) return u == 0;
  auto f = snf(IntMatrix::from_columns(in_lin, m.ambient_rank())).invariant_factors;
  if (f.size() != u) return false;
  return std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
}

IntMatrix reverse_columns(const IntMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, m.cols() - 1 - j) = m(i, j);
  return r;
}

// Hermite form with the last column treated as the leading one.
IntMatrix hermite_rows_from_right(const IntMatrix& m) {
  IntMatrix h = reverse_columns(hermite_rows(reverse_columns(m)));
  IntMatrix r(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) r(h.rows() - 1 - i, j) = h(i, j);
  return r;
}

IntMatrix column_block(const IntMatrix& m, std::size_t first, std::size_t count) {
  IntMatrix r(m.rows(), count);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < count; ++j) r(i, j) = m(i, first + j);
  return r;
}

}  // namespace

FsMonoid::FsMonoid(std::size_t ambient_rank, std::vector<Vec> generators)
    : rank_(ambient_rank),
      gens_(clean(ambient_rank, std::move(generators))),
      cone_(ambient_rank, gens_),
      flags_(std::make_shared<Flags>()) {}

FsMonoid FsMonoid::free(std::size_t rank) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    Vec e(rank);
    e[i] = 1;
    gens.push_back(e);
  }
  return FsMonoid(rank, gens);
}

FsMonoid FsMonoid::trivial(std::size_t ambient_rank) { return FsMonoid(ambient_rank, {}); }

const FsMonoid::Flags& FsMonoid::flags() const {
  std::call_once(flags_->once, [this] {
    flags_->sharp = cone_.is_pointed();
    if (flags_->sharp) {
      bool sat = true;
      for (const Vec& h : hilbert_basis(cone_))
        if (!generated_contains(h)) {
          sat = false;
          break;
        }
      flags_->saturated = sat;
    } else {
      flags_->saturated = units_saturated(*this) && sharpen(*this).sharp.is_saturated();
    }
  });
  return *flags_;
}

bool FsMonoid::is_sharp() const { return flags().sharp; }
bool FsMonoid::is_saturated() const { return flags().saturated; }

// Depth-first search for a decomposition into generators. Terminates because
// every generator has positive height under an interior grading.
bool FsMonoid::generated_contains(const Vec& v) const {
  if (!cone_.contains(v)) return false;
  std::set<Vec> failed;
  auto search = [&](auto&& self, const Vec& x) -> bool {
    if (is_zero(x)) return true;
    if (std::binary_search(gens_.begin(), gens_.end(), x)) return true;
    if (failed.count(x)) return false;
    for (const Vec& g : gens_) {
      Vec rest = sub(x, g);
      if (cone_.contains(rest) && self(self, rest)) return true;
    }
    failed.insert(x);
    return false;
  };
  return search(search, v);
}

bool FsMonoid::contains(const Vec& v) const {
  if (v.size() != rank_) throw Error("membership test: dimension mismatch");
  if (!cone_.contains(v)) return false;
  if (is_saturated()) return true;
  if (is_sharp()) return generated_contains(v);
  if (!units_saturated(*this))
    throw Error("membership in a non-saturated monoid with units is not supported");
  SharpenResult s = sharpen(*this);
  return s.sharp.contains(s.projection.apply(v));
}

bool same_saturation(const FsMonoid& a, const FsMonoid& b) {
  return a.ambient_rank() == b.ambient_rank() &&
         lattice_generators(a.cone()) == lattice_generators(b.cone());
}

MonoidMorphism::MonoidMorphism(FsMonoid source, FsMonoid target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ambient_rank() || matrix_.cols() != source_.ambient_rank())
    throw Error("morphism matrix has shape " + std::to_string(matrix_.rows()) + "x" +
                std::to_string(matrix_.cols()) + ", expected " +
                std::to_string(target_.ambient_rank()) + "x" +
                std::to_string(source_.ambient_rank()));
  for (const Vec& g : source_.generators())
    if (!target_.contains(matrix_.apply(g)))
      throw Error("morphism sends generator " + to_string(g) + " outside the target monoid");
}

std::size_t MonoidDiagram::add_object(FsMonoid m) {
  objects_.push_back(std::move(m));
  return objects_.size() - 1;
}

void MonoidDiagram::add_arrow(std::size_t source, std::size_t target, IntMatrix matrix) {
  if (source >= objects_.size() || target >= objects_.size())
    throw Error("diagram arrow endpoint out of range");
  arrows_.push_back({source, target,
                     MonoidMorphism(objects_[source], objects_[target], std::move(matrix))});
}

FsMonoid saturate(const FsMonoid& m) {
  if (!m.is_sharp()) throw Error("saturate: monoid is not sharp; sharpen first");
  return FsMonoid(m.ambient_rank(), hilbert_basis(m.cone()));
}

SharpenResult sharpen(const FsMonoid& m) {
  const std::size_t n = m.ambient_rank();
  std::vector<Vec> lin = m.cone().lineality_basis();
  SharpenResult out;
  out.unit_rank = lin.size();
  if (lin.empty()) {
    out.sharp = m;
    out.projection = IntMatrix::identity(n);
    return out;
  }
  // Rows of U past the rank annihilate the (saturated) lineality lattice and
  // form a basis of its dual complement.
  SmithDecomposition sd = snf(IntMatrix::from_columns(lin, n));
  std::vector<Vec> rows;
  for (std::size_t i = sd.rank(); i < n; ++i) rows.push_back(sd.U.row(i));
  IntMatrix q = rows.empty() ? IntMatrix(0, n)
                             : hermite_rows(IntMatrix::from_rows(rows, n));
  std::vector<Vec> images;
  for (const Vec& g : m.generators()) images.push_back(q.apply(g));
  out.sharp = FsMonoid(q.rows(), images);
  out.projection = q;
  return out;
}

FsMonoid dual_monoid(const FsMonoid& m) {
  return FsMonoid(m.ambient_rank(), lattice_generators(dual(m.cone())));
}

ColimitResult fs_colimit(const MonoidDiagram& d) {
  const auto& objs = d.objects();
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const FsMonoid& o : objs) {
    offset.push_back(total);
    total += o.ambient_rank();
  }

  // x in object s is identified with its image in object t.
  std::vector<Vec> relations;
  for (const DiagramArrow& a : d.arrows()) {
    const IntMatrix& f = a.morphism.matrix();
    for (std::size_t u = 0; u < f.cols(); ++u) {
      Vec col(total);
      col[offset[a.source] + u] += 1;
      for (std::size_t i = 0; i < f.rows(); ++i) col[offset[a.target] + i] -= f(i, u);
      relations.push_back(col);
    }
  }

  ColimitResult out;
  IntMatrix group;  // Z^total -> free part of the group colimit
  if (relations.empty()) {
    group = IntMatrix::identity(total);
  } else {
    SmithDecomposition sd = snf(IntMatrix::from_columns(relations, total));
    for (const Integer& x : sd.invariant_factors)
      if (x > 1) out.group_torsion.push_back(x);
    std::vector<Vec> rows;
    for (std::size_t i = sd.rank(); i < total; ++i) rows.push_back(sd.U.row(i));
    group = rows.empty() ? IntMatrix(0, total)
                         : hermite_rows_from_right(IntMatrix::from_rows(rows, total));
  }

  std::vector<Vec> images;
  for (std::size_t k = 0; k < objs.size(); ++k)
    for (const Vec& g : objs[k].generators()) {
      Vec x(total);
      for (std::size_t j = 0; j < g.size(); ++j) x[offset[k] + j] = g[j];
      images.push_back(group.apply(x));
    }
  FsMonoid generated(group.rows(), images);
  SharpenResult s = sharpen(generated);
  out.unit_rank = s.unit_rank;
  out.colimit = saturate(s.sharp);

  IntMatrix total_map = s.projection * group;
  for (std::size_t k = 0; k < objs.size(); ++k)
    out.structure_maps.emplace_back(objs[k], out.colimit,
                                    column_block(total_map, offset[k], objs[k].ambient_rank()));
  return out;
}

bool zero_preimage_trivial(const MonoidMorphism& f) {
  const Cone& c = f.source().cone();
  std::vector<Vec> ineq = c.facets();
  for (const Vec& e : c.equations()) {
    ineq.push_back(e);
    ineq.push_back(negate(e));
  }
  for (const Vec& r : f.matrix().row_vectors()) {
    ineq.push_back(r);
    ineq.push_back(negate(r));
  }
  ConeGenerators g = double_description(ineq, f.source().ambient_rank());
  return g.rays.empty() && g.lineality.empty();
}

}  // namespace a1c
