#include "a1c/cone.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include <boost/dynamic_bitset.hpp>

namespace a1c {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Vec> hermite_basis(const std::vector<Vec>& vs, std::size_t n) {
  if (vs.empty()) return {};
  return hermite_rows(IntMatrix::from_rows(vs, n)).row_vectors();
}

// Tight set of a ray against the already inserted inequalities.
Bits tight_set(const Vec& ray, const std::vector<Vec>& inserted) {
  Bits b(inserted.size());
  for (std::size_t k = 0; k < inserted.size(); ++k)
    if (dot(inserted[k], ray) == 0) b.set(k);
  return b;
}

}  // namespace

ConeGenerators double_description(std::vector<Vec> inequalities,
                                  std::size_t ambient_rank) {
  for (Vec& a : inequalities) {
    if (a.size() != ambient_rank)
      throw Error("double_description: inequality of wrong length");
    a = primitive(a);
  }
  std::erase_if(inequalities, [](const Vec& a) { return is_zero(a); });
  canonicalize(inequalities);

  std::vector<Vec> lin = IntMatrix::identity(ambient_rank).row_vectors();
  std::vector<Vec> rays;
  std::vector<Vec> inserted;

  for (const Vec& a : inequalities) {
    auto pivot = std::find_if(lin.begin(), lin.end(),
                              [&](const Vec& l) { return dot(a, l) != 0; });
    if (pivot != lin.end()) {
      // The constraint cuts the lineality space: project everything onto
      // a = 0 along the pivot direction, which becomes a new ray.
      Vec piv = *pivot;
      Integer ap = dot(a, piv);
      if (ap < 0) {
        piv = negate(piv);
        ap = -ap;
      }
      std::vector<Vec> new_lin;
      for (auto it = lin.begin(); it != lin.end(); ++it) {
        if (it == pivot) continue;
        new_lin.push_back(primitive(sub(scale(ap, *it), scale(dot(a, *it), piv))));
      }
      std::vector<Vec> new_rays;
      for (const Vec& e : rays)
        new_rays.push_back(primitive(sub(scale(ap, e), scale(dot(a, e), piv))));
      new_rays.push_back(piv);
      lin = std::move(new_lin);
      rays = std::move(new_rays);
      inserted.push_back(a);
      continue;
    }

    std::vector<std::size_t> pos, neg;
    std::vector<Vec> next;
    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i]);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
    }
    if (neg.empty()) {
      inserted.push_back(a);
      continue;
    }
    std::vector<Bits> zs;
    zs.reserve(rays.size());
    for (const Vec& e : rays) zs.push_back(tight_set(e, inserted));

    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);

    // Combinatorial adjacency: p and q span a 2-face iff no third extreme
    // ray is tight on everything both are tight on.
    const std::size_t pointed_dim = ambient_rank - lin.size();
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common = zs[p] & zs[q];
        if (pointed_dim >= 2 && common.count() + 2 < pointed_dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(zs[r])) adjacent = false;
        }
        if (!adjacent) continue;
        next.push_back(
            primitive(sub(scale(val[p], rays[q]), scale(val[q], rays[p]))));
      }
    rays = std::move(next);
    inserted.push_back(a);
  }

  ConeGenerators out;
  out.lineality = hermite_basis(lin, ambient_rank);
  out.rays = std::move(rays);
  canonicalize(out.rays);
  return out;
}

//-----------------------------------------------------------------------------
// Cone
//-----------------------------------------------------------------------------

Cone::Cone(std::size_t ambient_rank, std::vector<Vec> rays)
    : rank_(ambient_rank), desc_(std::make_shared<Description>()) {
  for (Vec& r : rays) {
    if (r.size() != ambient_rank) throw Error("Cone: ray of wrong length");
    if (is_zero(r)) continue;
    rays_.push_back(primitive(r));
  }
  canonicalize(rays_);
}

Cone Cone::zero(std::size_t ambient_rank) { return Cone(ambient_rank, {}); }

Cone Cone::orthant(std::size_t ambient_rank) {
  return Cone(ambient_rank, IntMatrix::identity(ambient_rank).row_vectors());
}

Cone Cone::from_inequalities(std::size_t ambient_rank,
                             std::vector<Vec> inequalities) {
  ConeGenerators g = double_description(std::move(inequalities), ambient_rank);
  std::vector<Vec> rays = g.rays;
  for (const Vec& l : g.lineality) {
    rays.push_back(l);
    rays.push_back(negate(l));
  }
  return Cone(ambient_rank, std::move(rays));
}

const Cone::Description& Cone::description() const {
  std::call_once(desc_->once, [this] {
    ConeGenerators g = double_description(rays_, rank_);
    desc_->facets = std::move(g.rays);
    desc_->equations = std::move(g.lineality);
  });
  return *desc_;
}

const std::vector<Vec>& Cone::facets() const { return description().facets; }

const std::vector<Vec>& Cone::equations() const {
  return description().equations;
}

bool Cone::contains(const Vec& v) const {
  if (v.size() != rank_) throw Error("Cone::contains: vector of wrong length");
  const Description& d = description();
  for (const Vec& e : d.equations)
    if (dot(e, v) != 0) return false;
  for (const Vec& f : d.facets)
    if (dot(f, v) < 0) return false;
  return true;
}

std::size_t Cone::dimension() const { return rank(rays_, rank_); }

bool Cone::is_pointed() const {
  std::vector<Vec> all = facets();
  all.insert(all.end(), equations().begin(), equations().end());
  return rank(all, rank_) == rank_;
}

bool Cone::is_full_dimensional() const { return equations().empty(); }

std::vector<Vec> Cone::extreme_rays() const {
  std::vector<Vec> out;
  if (rank_ == 0) return out;
  for (const Vec& r : rays_) {
    std::vector<Vec> tight = equations();
    for (const Vec& f : facets())
      if (dot(f, r) == 0) tight.push_back(f);
    if (rank(tight, rank_) + 1 == rank_) out.push_back(r);
  }
  return out;
}

std::vector<Vec> Cone::lineality_basis() const {
  std::vector<Vec> all = facets();
  all.insert(all.end(), equations().begin(), equations().end());
  IntMatrix m = all.empty() ? IntMatrix(0, rank_) : IntMatrix::from_rows(all, rank_);
  return hermite_basis(kernel_basis(m), rank_);
}

Vec Cone::interior_grading() const {
  Vec g(rank_);
  for (const Vec& f : facets()) g = add(g, f);
  return g;
}

//-----------------------------------------------------------------------------
// Operations
//-----------------------------------------------------------------------------

Cone dual(const Cone& c) {
  std::vector<Vec> rays = c.facets();
  for (const Vec& e : c.equations()) {
    rays.push_back(e);
    rays.push_back(negate(e));
  }
  return Cone(c.ambient_rank(), std::move(rays));
}

Cone negate(const Cone& c) {
  std::vector<Vec> rays;
  for (const Vec& r : c.rays()) rays.push_back(negate(r));
  return Cone(c.ambient_rank(), std::move(rays));
}

bool contains_cone(const Cone& outer, const Cone& inner) {
  if (outer.ambient_rank() != inner.ambient_rank())
    throw Error("contains_cone: ambient ranks differ");
  return std::all_of(inner.rays().begin(), inner.rays().end(),
                     [&](const Vec& r) { return outer.contains(r); });
}

bool same_set(const Cone& a, const Cone& b) {
  return contains_cone(a, b) && contains_cone(b, a);
}

ShapeFlags shape_flags(const Cone& c) {
  return ShapeFlags{c.is_pointed(), c.is_full_dimensional()};
}

namespace {

void pull(const std::vector<Vec>& rays, std::size_t n,
          std::vector<std::vector<Vec>>& out) {
  if (rays.empty()) return;
  if (rank(rays, n) == rays.size()) {
    out.push_back(rays);
    return;
  }
  Cone sub(n, rays);
  const Vec& apex = rays.front();
  for (const Vec& f : sub.facets()) {
    if (dot(f, apex) == 0) continue;
    std::vector<Vec> face;
    for (const Vec& r : rays)
      if (dot(f, r) == 0) face.push_back(r);
    std::vector<std::vector<Vec>> parts;
    pull(face, n, parts);
    for (auto& s : parts) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<std::vector<Vec>> triangulate(const Cone& c) {
  if (!c.is_pointed()) throw Error("triangulate: cone is not pointed");
  std::vector<std::vector<Vec>> out;
  pull(c.extreme_rays(), c.ambient_rank(), out);
  return out;
}

std::vector<Vec> fundamental_parallelepiped(const std::vector<Vec>& rays,
                                            std::size_t ambient_rank) {
  const std::size_t k = rays.size();
  if (k == 0) return {Vec(ambient_rank)};
  IntMatrix r = IntMatrix::from_columns(rays, ambient_rank);
  SmithDecomposition sd = snf(r);
  if (sd.rank() != k)
    throw Error("fundamental_parallelepiped: rays are linearly dependent");
  const Integer& top = sd.invariant_factors.back();

  // Residues y_j in [0, d_j) index the classes of (Z^n cap span) / R Z^k;
  // lambda = V D^{-1} y, reduced mod 1, gives the representative R lambda.
  std::vector<Integer> y(k, 0);
  std::vector<Vec> out;
  for (;;) {
    Vec mu(k);
    for (std::size_t i = 0; i < k; ++i) {
      Integer num = 0;
      for (std::size_t j = 0; j < k; ++j)
        num += sd.V(i, j) * y[j] * (top / sd.invariant_factors[j]);
      num %= top;
      if (num < 0) num += top;
      mu[i] = num;
    }
    Vec x = r.apply(mu);
    for (Integer& xi : x) xi /= top;
    out.push_back(std::move(x));

    std::size_t pos = 0;
    while (pos < k) {
      if (++y[pos] < sd.invariant_factors[pos]) break;
      y[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  canonicalize(out);
  return out;
}

std::vector<Vec> hilbert_basis(const Cone& c) {
  if (!c.is_pointed())
    throw Error("cone has lines; Hilbert basis undefined in this artifact");
  const std::size_t n = c.ambient_rank();
  std::set<Vec> candidates;
  for (const auto& simplex : triangulate(c)) {
    for (Vec& p : fundamental_parallelepiped(simplex, n))
      if (!is_zero(p)) candidates.insert(std::move(p));
    candidates.insert(simplex.begin(), simplex.end());
  }

  const Vec grading = c.interior_grading();
  std::vector<std::pair<Integer, Vec>> graded;
  for (const Vec& v : candidates) graded.emplace_back(dot(grading, v), v);
  std::sort(graded.begin(), graded.end());

  std::vector<Vec> basis;
  for (std::size_t i = 0; i < graded.size(); ++i) {
    const auto& [deg, v] = graded[i];
    bool reducible = false;
    for (std::size_t j = 0; j < i && !reducible; ++j) {
      if (graded[j].first == deg) break;
      reducible = c.contains(sub(v, graded[j].second));
    }
    if (!reducible) basis.push_back(v);
  }
  canonicalize(basis);
  return basis;
}

std::vector<Vec> lattice_generators(const Cone& c) {
  if (c.is_pointed()) return hilbert_basis(c);
  const std::size_t n = c.ambient_rank();
  const std::vector<Vec> lin = c.lineality_basis();
  const std::size_t u = lin.size();

  SmithDecomposition sd = snf(IntMatrix::from_columns(lin, n));
  IntMatrix uinv = unimodular_inverse(sd.U);
  IntMatrix proj(n - u, n), section(n, n - u);
  for (std::size_t i = 0; i < n - u; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      proj(i, j) = sd.U(u + i, j);
      section(j, i) = uinv(j, u + i);
    }

  std::vector<Vec> qrays;
  for (const Vec& r : c.rays()) qrays.push_back(proj.apply(r));
  std::vector<Vec> out;
  for (const Vec& h : hilbert_basis(Cone(n - u, std::move(qrays))))
    out.push_back(section.apply(h));
  for (const Vec& l : lin) {
    out.push_back(l);
    out.push_back(negate(l));
  }
  canonicalize(out);
  return out;
}

std::vector<Vec> enumerate_bounded(const Cone& c, const Vec& height,
                                   const Integer& bound) {
  const std::size_t n = c.ambient_rank();
  if (height.size() != n) throw Error("enumerate_bounded: height of wrong length");
  if (bound < 0) throw Error("enumerate_bounded: bound must be nonnegative");
  for (const Vec& r : c.rays())
    if (dot(height, r) <= 0) throw Error("unbounded enumeration");

  // The truncated cone is the convex hull of 0 and bound / <h, r> * r.
  Vec lo(n, Integer(0)), hi(n, Integer(0));
  for (const Vec& r : c.rays()) {
    Integer h = dot(height, r);
    for (std::size_t j = 0; j < n; ++j) {
      Integer num = bound * r[j];
      lo[j] = std::min(lo[j], floor_div(num, h));
      hi[j] = std::max(hi[j], -floor_div(-num, h));
    }
  }

  std::vector<std::pair<Integer, Vec>> found;
  Vec v = lo;
  for (;;) {
    Integer h = dot(height, v);
    if (h <= bound && c.contains(v)) found.emplace_back(h, v);
    std::size_t pos = 0;
    while (pos < n) {
      if (++v[pos] <= hi[pos]) break;
      v[pos] = lo[pos];
      ++pos;
    }
    if (pos == n) break;
  }
  std::sort(found.begin(), found.end());
  std::vector<Vec> out;
  out.reserve(found.size());
  for (auto& [h, p] : found) out.push_back(std::move(p));
  return out;
}

}  // namespace a1c
