#include "doctest.h"
#include "dunkl/rootsys.hpp"

#include <cmath>
#include <set>

#include "json.hpp"

using namespace dunkl;

TEST_CASE("family construction matches the classical lists") {
  auto a1 = build_root_system(Family::A, 1);
  CHECK(a1.dim == 2);
  CHECK(a1.rank == 1);
  CHECK(a1.nroots() == 2);
  CHECK(a1.weyl_order() == 2);
  CHECK(a1.roots[0] == QVec{1, -1});

  auto b2 = build_root_system(Family::B, 2);
  CHECK(b2.nroots() == 8);
  CHECK(b2.positive.size() == 4);
  CHECK(b2.weyl_order() == 8);
  CHECK(b2.crystallographic);
  CHECK(b2.reduced);
  CHECK(b2.norbits == 2);

  auto c2 = build_root_system(Family::C, 2);
  CHECK(c2.nroots() == 8);
  CHECK(c2.norbits == 2);
  CHECK(c2.roots[0] == QVec{2, 0});

  auto bc1 = build_root_system(Family::BC, 1);
  CHECK(bc1.nroots() == 4);
  CHECK_FALSE(bc1.reduced);
  CHECK(bc1.norbits == 2);
  CHECK(bc1.weyl_order() == 2);

  auto bc2 = build_root_system(Family::BC, 2);
  CHECK(bc2.nroots() == 12);
  CHECK(bc2.norbits == 3);

  auto d3 = build_root_system(Family::D, 3);
  CHECK(d3.nroots() == 12);
  CHECK(d3.weyl_order() == 24);
  CHECK(d3.norbits == 1);

  auto p3 = build_root_system(Family::A1prod, 3);
  CHECK(p3.nroots() == 6);
  CHECK(p3.norbits == 3);
  CHECK(p3.weyl_order() == 8);

  auto q2 = build_root_system(Family::BC1prod, 2);
  CHECK(q2.nroots() == 8);
  CHECK(q2.norbits == 4);
  CHECK_FALSE(q2.reduced);

  CHECK_THROWS_AS(build_root_system(Family::D, 2), num_error);
  CHECK_THROWS_AS(build_root_system(Family::I2, 2), num_error);
  CHECK_THROWS_AS(family_from_string("E"), num_error);
}

TEST_CASE("I2(m): indices, orbits, crystallographic flag") {
  auto i5 = build_root_system(Family::I2, 5);
  CHECK(i5.nroots() == 10);
  CHECK(i5.positive.size() == 5);
  CHECK(i5.simple == std::vector<int>{0, 4});
  CHECK(i5.norbits == 1);
  CHECK_FALSE(i5.crystallographic);

  auto i6 = build_root_system(Family::I2, 6);
  CHECK(i6.norbits == 2);
  CHECK(i6.orbit[0] == 0);
  CHECK(i6.orbit[1] == 1);
  // unit-length representation: 2cos(pi/6) is not an integer
  CHECK_FALSE(i6.crystallographic);
  CHECK(build_root_system(Family::I2, 3).crystallographic);
}

TEST_CASE("reflect: involution, hyperplane fixed, coordinate flip") {
  QVec e1{1, 0};
  CHECK(reflect(e1, QVec{1, 2}) == QVec{-1, 2});
  QVec alpha{1, -1, 0};
  QVec on_wall{1, 1, 2};
  CHECK(reflect(alpha, on_wall) == on_wall);
  // involution on a spread of rational points
  QVec beta{2, -1, Rat(1, 3)};
  for (int t = -5; t <= 5; ++t) {
    QVec x{Rat(t, 7), Rat(3 - t, 2), Rat(t * t, 9)};
    CHECK(reflect(beta, reflect(beta, x)) == x);
  }
  // coroot duality on C3 and BC2
  for (auto fam : {Family::C, Family::BC}) {
    auto R = build_root_system(fam, fam == Family::C ? 3 : 2);
    for (const auto& r : R.roots) CHECK(coroot(coroot(r)) == r);
  }
}

TEST_CASE("weyl_group: orders, longest element, I2 group law") {
  CHECK(weyl_group(build_root_system(Family::A, 2)).elements.size() == 6);
  CHECK(weyl_group(build_root_system(Family::I2, 5)).elements.size() == 10);
  CHECK(weyl_group(build_root_system(Family::D, 3)).elements.size() == 24);
  CHECK(weyl_group(build_root_system(Family::B, 3)).elements.size() == 48);

  auto b2 = build_root_system(Family::B, 2);
  auto W = weyl_group(b2);
  CHECK(W.length[0] == 0);
  CHECK(W.length[W.longest] == 4);
  // w0 maps the chamber point to its negative for B2
  QVec img = apply_elem(W.elements[W.longest], b2.chamber);
  for (int i = 0; i < b2.dim; ++i) CHECK(img[i] == -b2.chamber[i]);

  // I2(m): w0 maps the chamber sector to its opposite
  for (int m : {4, 5, 6, 7}) {
    auto R = build_root_system(Family::I2, m);
    auto Wm = weyl_group(R);
    CHECK(Wm.elements.size() == size_t(2 * m));
    CHECK(Wm.length[Wm.longest] == m);
    double mid = (0.5 - 0.5 / m) * num::pi;
    std::vector<double> x{std::cos(mid), std::sin(mid)};
    auto y = apply_elem_num(R, Wm.elements[Wm.longest], x);
    CHECK(y[0] == doctest::Approx(-x[0]).epsilon(1e-12));
    CHECK(y[1] == doctest::Approx(-x[1]).epsilon(1e-12));
  }

  CHECK_THROWS_AS(weyl_group(build_root_system(Family::B, 7)), num_error);
}

TEST_CASE("dominant: chamber representative with deterministic w") {
  auto b2 = build_root_system(Family::B, 2);
  auto W = weyl_group(b2);
  auto [xp, w] = dominant(b2, W, QVec{-1, 3});
  CHECK(xp == QVec{3, 1});
  CHECK(w != 0);
  auto [yp, wy] = dominant(b2, W, QVec{3, 1});
  CHECK(yp == QVec{3, 1});
  CHECK(wy == 0);  // identity: already dominant
  // orbit invariance: every W-image of x has the same dominant representative
  for (const auto& e : W.elements)
    CHECK(dominant(b2, W, apply_elem(e, QVec{-1, 3})).first == xp);

  auto p1 = build_root_system(Family::A1prod, 1);
  auto Wp = weyl_group(p1);
  CHECK(dominant(p1, Wp, QVec{-5}).first == QVec{5});

  // A1 in ambient coordinates: reflection swaps the two entries
  auto a1 = build_root_system(Family::A, 1);
  auto Wa = weyl_group(a1);
  CHECK(dominant(a1, Wa, QVec{-5, 0}).first == QVec{0, -5});

  auto i4 = build_root_system(Family::I2, 4);
  auto Wi = weyl_group(i4);
  auto [zi, wi] = dominant_i2(i4, Wi, {1.0, 0.0});
  (void)wi;
  double ang = std::atan2(zi[1], zi[0]);
  CHECK(ang >= (0.5 - 1.0 / 4) * num::pi - 1e-12);
  CHECK(ang <= 0.5 * num::pi + 1e-12);
  CHECK(std::hypot(zi[0], zi[1]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("delta_weight: closed forms, walls, W-invariance") {
  auto a1 = build_root_system(Family::A, 1);
  Multiplicity k0{{Rat(0)}};
  CHECK(delta_weight(a1, k0, {0.3, 0.9}, false) == doctest::Approx(1.0));

  // A1 with scalar coordinate s along the unit span direction: |s sqrt2|^{2k}
  Multiplicity k1{{Rat(1)}};
  double s = 0.7, t = s / std::sqrt(2.0);
  CHECK(delta_weight(a1, k1, {t, -t}, false) ==
        doctest::Approx(std::pow(s * std::sqrt(2.0), 2.0)).epsilon(1e-13));

  auto b2 = build_root_system(Family::B, 2);
  Multiplicity kb{{Rat(1, 2), Rat(3, 4)}};
  CHECK(delta_weight(b2, kb, {2.0, 2.0}, false) == doctest::Approx(0.0));
  auto W = weyl_group(b2);
  std::vector<double> x{0.83, -1.91};
  double ref = delta_weight(b2, kb, x, false);
  double reft = delta_weight(b2, kb, x, true);
  for (const auto& e : W.elements) {
    auto y = apply_elem_num(b2, e, x);
    CHECK(delta_weight(b2, kb, y, false) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(delta_weight(b2, kb, y, true) == doctest::Approx(reft).epsilon(1e-12));
  }
  Multiplicity kneg{{Rat(-1), Rat(0)}};
  CHECK_THROWS_AS(delta_weight(b2, kneg, x, false), num_error);
}

TEST_CASE("rho_gamma: closed forms and dominance") {
  auto b2 = build_root_system(Family::B, 2);
  Multiplicity k0{{Rat(0), Rat(0)}};
  auto [rho0, g0] = rho_gamma(b2, k0);
  CHECK(rho0 == QVec{0, 0});
  CHECK(g0 == 0);

  Multiplicity kb{{Rat(1, 2), Rat(1, 3)}};  // short a, long b
  auto [rho, g] = rho_gamma(b2, kb);
  CHECK(g == Rat(2) * Rat(1, 2) + Rat(2) * Rat(1, 3));  // 2a + 2b
  CHECK(rho == QVec{Rat(1, 4) + Rat(1, 3), Rat(1, 4)});

  // rank-one R = {±α, ±2α}: rho = (k1/2 + k2) α
  auto bc1 = build_root_system(Family::BC, 1);
  Multiplicity kk{{Rat(3, 2), Rat(2, 5)}};
  auto [rho1, g1] = rho_gamma(bc1, kk);
  CHECK(rho1 == QVec{Rat(3, 4) + Rat(2, 5)});
  CHECK(g1 == Rat(3, 2) + Rat(2, 5));

  auto i5 = build_root_system(Family::I2, 5);
  Multiplicity ki{{Rat(2)}};
  CHECK(gamma_sum(i5, ki) == 10);
  CHECK_THROWS_AS(rho_gamma(i5, ki), num_error);
  auto rnum = rho_numeric(i5, ki);
  // numeric rho must be dominant: positive pairing with both simple roots
  CHECK(inner_num(i5, 0, rnum) > 0);
  CHECK(inner_num(i5, 4, rnum) > 0);
}

TEST_CASE("root_system_json round-trips the fields") {
  auto b2 = build_root_system(Family::B, 2);
  auto j = nlohmann::json::parse(root_system_json(b2));
  CHECK(j["family"] == "B");
  CHECK(j["param"] == 2);
  CHECK(j["weyl_order"] == 8);
  CHECK(j["roots"].size() == 8);
  auto i5 = nlohmann::json::parse(root_system_json(build_root_system(Family::I2, 5)));
  CHECK(i5["i2_index"].size() == 10);
}
