#include <set>

#include "doctest.h"

#include "a1c/wonderful.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace a1c;
using support::vecs;

namespace {

SphericalData sc(const std::string& t) {
  return group_wonderful_data(build_root_system(t), Isogeny::simply_connected);
}
SphericalData ad(const std::string& t) {
  return group_wonderful_data(build_root_system(t), Isogeny::adjoint);
}

std::vector<Vec> classes(const std::vector<ClassifiedClass>& cs) {
  std::vector<Vec> out;
  for (const auto& c : cs) out.push_back(c.curve_class);
  return out;
}

// Independent Cartan matrices written out by hand.
const std::vector<std::pair<std::string, IntMatrix>>& hand_cartans() {
  static const std::vector<std::pair<std::string, IntMatrix>> table{
      {"A1", IntMatrix{{2}}},
      {"A2", IntMatrix{{2, -1}, {-1, 2}}},
      {"B2", IntMatrix{{2, -2}, {-1, 2}}},
      {"G2", IntMatrix{{2, -1}, {-3, 2}}},
      {"C3", IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}},
      {"B3", IntMatrix{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}},
      {"F4", IntMatrix{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}},
      {"D4", IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}},
  };
  return table;
}

}  // namespace

TEST_CASE("build_root_system: examples and hand-written matrices") {
  CHECK(build_root_system("A1").cartan == IntMatrix{{2}});
  CHECK(build_root_system("A_2").cartan == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(build_root_system("A_2").type_label == "A2");
  for (const auto& [label, m] : hand_cartans()) CHECK(build_root_system(label).cartan == m);
  CHECK(determinant(build_root_system("G2").cartan) == 1);
  for (const char* bad : {"H3", "B1", "C2", "D3", "E9", "F3", "G3", "A0", "", "A-1"})
    CHECK_THROWS_AS(build_root_system(bad), Error);
}

TEST_CASE("Cartan determinants and invariant factors by type") {
  // Centre orders of the simply connected groups.
  std::vector<std::pair<std::string, std::vector<long long>>> expect{
      {"A1", {2}}, {"A3", {1, 1, 4}}, {"B4", {1, 1, 1, 2}}, {"C4", {1, 1, 1, 2}},
      {"D4", {1, 1, 2, 2}}, {"D5", {1, 1, 1, 1, 4}}, {"E6", {1, 1, 1, 1, 1, 3}},
      {"E7", {1, 1, 1, 1, 1, 1, 2}}, {"E8", {1, 1, 1, 1, 1, 1, 1, 1}}};
  for (const auto& [t, f] : expect) {
    std::vector<Integer> want(f.begin(), f.end());
    INFO(t);
    CHECK(snf(build_root_system(t).cartan).invariant_factors == want);
  }
}

TEST_CASE("validate_cartan rejects broken matrices") {
  RootSystem rs = build_root_system("A2");
  rs.cartan(0, 1) = 1;
  CHECK_THROWS_AS(validate_cartan(rs), Error);
  rs = build_root_system("A2");
  rs.type_label = "B2";
  CHECK_THROWS_AS(validate_cartan(rs), Error);
  RootSystem split{"A2", IntMatrix{{2, 0}, {0, 2}}, 2};
  CHECK_THROWS_AS(validate_cartan(split), Error);
}

TEST_CASE("simple_types_up_to_rank") {
  auto t = simple_types_up_to_rank(4);
  CHECK(t == std::vector<std::string>{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3",
                                      "C4", "D4", "F4", "G2"});
  CHECK(simple_types_up_to_rank(8).size() == 8 + 7 + 6 + 5 + 3 + 1 + 1);
}

TEST_CASE("group_wonderful_data: examples") {
  SphericalData a1 = sc("A1");
  REQUIRE(a1.colors.size() == 1);
  CHECK(a1.colors[0].valuation == make_vec({1}));
  CHECK(a1.valuation_cone.rays() == vecs({{-1}}));

  SphericalData a2 = sc("A2");
  CHECK(a2.colors[0].valuation == make_vec({1, 0}));
  CHECK(a2.colors[1].valuation == make_vec({0, 1}));
  CHECK(negate(a2.valuation_cone).rays() == vecs({{1, 2}, {2, 1}}));
  CHECK(a2.coordinate_basis == "coroot");

  SphericalData a1ad = ad("A1");
  CHECK(a1ad.colors[0].valuation == make_vec({2}));
  CHECK(a1ad.coordinate_basis == "coweight");
  CHECK(a1ad.valuation_cone.rays() == vecs({{-1}}));
}

TEST_CASE("distinguished_chart: examples") {
  DFChart a1 = distinguished_chart(sc("A1"));
  CHECK(a1.monoid() == FsMonoid(1, vecs({{-1}})));
  CHECK(a1.L() == IntMatrix{{-1}});

  DFChart a2 = distinguished_chart(sc("A2"));
  CHECK(a2.monoid().ambient_rank() == 2);
  CHECK(a2.L() == -IntMatrix::identity(2));
  CHECK(same_set(a2.dual_cone(), sc("A2").valuation_cone));

  SphericalData degenerate;
  CHECK_THROWS_AS(distinguished_chart(degenerate), Error);
}

TEST_CASE("check_hypotheses: examples") {
  HypothesisReport a2 = check_hypotheses(sc("A2"));
  CHECK((a2.knop && a2.cone && a2.all_colors_type_b));

  SphericalData ray;
  ray.lambda_rank = 2;
  ray.valuation_cone = negate(Cone::orthant(2));
  ray.colors = {{"D1", make_vec({1, 0}), ColorType::b}};
  ray.intersection_is_kronecker = ray.hyp_knop_asserted = true;
  CHECK_FALSE(check_hypotheses(ray).cone);

  SphericalData mixed = sc("A2");
  mixed.colors[1].type = ColorType::a;
  CHECK_FALSE(check_hypotheses(mixed).all_colors_type_b);
  CHECK_THROWS_WITH_AS(classify_curve_classes(ray, 2), "classification formula not available",
                       Error);
  CHECK_THROWS_AS(classify_curve_classes(mixed, 2), Error);

  SphericalData table = sc("A2");
  table.intersection_matrix = IntMatrix{{1, 1}, {0, 1}};
  CHECK_THROWS_AS(check_hypotheses(table), Error);
  table.intersection_is_kronecker = false;
  CHECK_FALSE(check_hypotheses(table).knop);
}

TEST_CASE("classify_curve_classes: examples") {
  CHECK(classes(classify_curve_classes(sc("A2"), 3)) ==
        vecs({{0, 0}, {1, 1}, {1, 2}, {2, 1}}));
  auto a1 = classify_curve_classes(sc("A1"), 3);
  CHECK(classes(a1) == vecs({{0}, {1}, {2}, {3}}));
  CHECK_FALSE(a1[0].is_A1_class);
  CHECK(a1[1].is_A1_class);
  CHECK(a1[1].contact == make_vec({-1}));
  auto zero = classify_curve_classes(sc("G2"), 0);
  REQUIRE(zero.size() == 1);
  CHECK(is_zero(zero[0].curve_class));
  CHECK_FALSE(zero[0].is_A1_class);
}

TEST_CASE("classify_curve_classes matches the Cartan inequalities by brute force") {
  for (const char* t : {"A2", "B2", "G2", "A3", "C3"}) {
    RootSystem rs = build_root_system(t);
    const std::size_t n = rs.rank;
    std::set<Vec> expected;
    std::vector<oracle::I64> a(n, 0);
    auto rec = [&](auto&& self, std::size_t i, oracle::I64 left) -> void {
      if (i == n) {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j) {
          oracle::I64 s = 0;
          for (std::size_t k = 0; k < n; ++k) s += static_cast<oracle::I64>(rs.cartan(j, k)) * a[k];
          ok = ok && s >= 0;
        }
        if (ok) expected.insert(support::to_vec(a));
        return;
      }
      for (oracle::I64 x = 0; x <= left; ++x) {
        a[i] = x;
        self(self, i + 1, left - x);
      }
    };
    rec(rec, 0, 6);
    auto got = classes(classify_curve_classes(sc(t), 6));
    CHECK(std::set<Vec>(got.begin(), got.end()) == expected);
    for (const Vec& x : got)
      for (const Vec& y : got) {
        Vec s = add(x, y);
        Integer h = 0;
        for (const auto& e : s) h += e;
        if (h <= 6) CHECK(expected.count(s) == 1);
      }
  }
}

TEST_CASE("verify_theorem_G: examples") {
  CHECK(verify_theorem_G(build_root_system("A1"), 5));
  CHECK(verify_theorem_G(build_root_system("A2"), 5));
  CHECK(verify_theorem_G(build_root_system("G2"), 5));
  CHECK(verify_theorem_G(build_root_system("F4"), 4));
}

TEST_CASE("isogeny_invariants: examples and the primitivity biconditional") {
  IsogenyInvariants a2 = isogeny_invariants(sc("A2"), distinguished_chart(sc("A2")));
  CHECK(a2.pi1_order == 1);
  CHECK(a2.primitive);
  CHECK(a2.character_group == CokernelStructure{0, {}});

  IsogenyInvariants a1 = isogeny_invariants(ad("A1"), distinguished_chart(ad("A1")));
  CHECK(a1.pi1_order == 2);
  CHECK_FALSE(a1.primitive);
  CHECK(a1.character_group.torsion_factors == std::vector<Integer>{2});

  for (std::size_t n = 2; n <= 6; ++n) {
    std::string t = "A" + std::to_string(n - 1);
    CHECK(isogeny_invariants(ad(t), distinguished_chart(ad(t))).pi1_order == Integer(n));
  }
  for (const std::string& t : simple_types_up_to_rank(6)) {
    for (Isogeny iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      SphericalData d = group_wonderful_data(build_root_system(t), iso);
      IsogenyInvariants inv = isogeny_invariants(d, distinguished_chart(d));
      CHECK(inv.primitive == (inv.pi1_order == 1));
    }
    IsogenyInvariants a = isogeny_invariants(ad(t), distinguished_chart(ad(t)));
    Integer prod = 1;
    for (const Integer& f : snf(build_root_system(t).cartan).invariant_factors) prod *= f;
    CHECK(a.pi1_order == prod);
  }

  SphericalData thin = sc("A2");
  thin.colors = {{"D1", make_vec({1, 0}), ColorType::b}};
  CHECK_THROWS_WITH_AS(isogeny_invariants(thin, distinguished_chart(thin)),
                       "valuation cone hypothesis violated", Error);
}
