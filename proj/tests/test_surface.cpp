#include <doctest.h>

#include "fibtop/errors.hpp"
#include "fibtop/surface.hpp"
#include "support.hpp"

using namespace fibtop;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long> v) {
  std::vector<Integer> e(v.begin(), v.end());
  return IntMatrix(r, c, std::move(e));
}

IntMatrix symplectic_j(int g) {
  IntMatrix j(2 * static_cast<std::size_t>(g), 2 * static_cast<std::size_t>(g), Integer(0));
  for (int i = 0; i < g; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

Twist random_twist(std::mt19937_64& g, int genus) {
  Curve c{fibtest::uniform(g, 0, 1) ? CurveKind::A : CurveKind::B, static_cast<int>(fibtest::uniform(g, 1, genus))};
  return Twist{c, fibtest::uniform(g, 0, 1) ? 1 : -1};
}

MappingClass random_class(std::mt19937_64& g, int genus, int max_len) {
  std::vector<Twist> w;
  const int len = static_cast<int>(fibtest::uniform(g, 0, max_len));
  for (int i = 0; i < len; ++i) w.push_back(random_twist(g, genus));
  return MappingClass(genus, w);
}

}  // namespace

TEST_CASE("words reduce on construction") {
  SurfaceData s(2);
  const Alphabet& al = s.generators;
  CHECK(al.parse("a1 a1^-1").empty());
  CHECK(al.parse("a1 b1 b1^-1 a1") == al.parse("a1^2"));
  CHECK(al.format(al.parse("a1 b1 b1^-1 a1")) == "a1 a1");
  const Word w = al.parse("a1 b2 a1^-1");
  CHECK(free_reduce(w.letters(), al) == w);
  CHECK(al.format(Word{}) == "1");
  CHECK_THROWS_AS(al.parse("a1 c7"), ParseError);
  CHECK_THROWS_AS(free_reduce({Letter{9, 1}}, al), std::exception);
  CHECK((w * w.inverse()).empty());
}

TEST_CASE("cyclic reduction and conjugacy") {
  Alphabet al({"x", "y"});
  CHECK(cyclically_reduce(al.parse("y x y^-1")) == al.parse("x"));
  CHECK(are_conjugate(al.parse("x y"), al.parse("y x")));
  CHECK(are_conjugate(al.parse("x y x^-1 y^-1"), al.parse("y^-1 x y x^-1")));
  CHECK_FALSE(are_conjugate(al.parse("x y"), al.parse("x y^-1")));
}

TEST_CASE("apply_endo examples") {
  Alphabet al({"x", "y"});
  const Word w = al.parse("x y^-1 x x");
  CHECK(apply_endo(FreeEndo::identity(2), w) == w);
  FreeEndo e({al.parse("x y"), al.parse("y")});
  CHECK(apply_endo(e, al.parse("x^-1")) == al.parse("y^-1 x^-1"));
  CHECK_THROWS_AS(apply_endo(FreeEndo::identity(1), al.parse("y")), std::out_of_range);

  for (int g = 1; g <= 4; ++g) {
    SurfaceData s(g);
    CHECK(are_conjugate(apply_endo(mapping_class_endo(family_phi(g)), s.relator), s.relator));
  }
}

TEST_CASE("compose examples") {
  SurfaceData s(2);
  FreeEndo ta = dehn_twist_pi1(Curve{CurveKind::A, 1}, 1, s);
  FreeEndo ta_inv = dehn_twist_pi1(Curve{CurveKind::A, 1}, -1, s);
  FreeEndo tb = dehn_twist_pi1(Curve{CurveKind::B, 2}, 1, s);
  CHECK(compose(ta, FreeEndo::identity(4)) == ta);
  CHECK(compose(ta, ta_inv) == FreeEndo::identity(4));
  CHECK(compose(ta_inv, ta) == FreeEndo::identity(4));
  CHECK(abelianize(compose(ta, tb)) == dehn_twist_h1(Curve{CurveKind::A, 1}, 1, 2) * dehn_twist_h1(Curve{CurveKind::B, 2}, 1, 2));
}

TEST_CASE("twist conventions") {
  SurfaceData s(1);
  // Handle-local formulas.
  FreeEndo ta = dehn_twist_pi1(Curve{CurveKind::A, 1}, 1, s);
  FreeEndo tb = dehn_twist_pi1(Curve{CurveKind::B, 1}, 1, s);
  const Alphabet& al = s.generators;
  CHECK(ta.image(SurfaceData::b_index(1)) == al.parse("b1 a1"));
  CHECK(ta.image(SurfaceData::a_index(1)) == al.parse("a1"));
  CHECK(tb.image(SurfaceData::a_index(1)) == al.parse("a1 b1^-1"));
  CHECK(apply_endo(ta, s.relator) == s.relator);
  CHECK(apply_endo(tb, s.relator) == s.relator);
  CHECK(kTwistHandedness == 1);

  // Golden: phi^*[alpha1] = [alpha1 + beta1], phi^*[beta1] = [beta1].
  CHECK(cohomology_action(MappingClass(1, {Twist{Curve{CurveKind::A, 1}, 1}})) == mat(2, 2, {1, 0, 1, 1}));
  CHECK(dehn_twist_h1(Curve{CurveKind::A, 1}, 1, 1).transposed() == mat(2, 2, {1, 0, 1, 1}));
  CHECK(dehn_twist_h1(Curve{CurveKind::A, 1}, 1, 1) * dehn_twist_h1(Curve{CurveKind::A, 1}, -1, 1) == identity_matrix(2));
  CHECK(abelianize(ta) == dehn_twist_h1(Curve{CurveKind::A, 1}, 1, 1));
  CHECK(abelianize(tb) == dehn_twist_h1(Curve{CurveKind::B, 1}, 1, 1));

  SurfaceData s2(2);
  FreeEndo a1 = dehn_twist_pi1(Curve{CurveKind::A, 1}, 1, s2);
  FreeEndo a2 = dehn_twist_pi1(Curve{CurveKind::A, 2}, 1, s2);
  CHECK(compose(a1, a2) == compose(a2, a1));
}

TEST_CASE("family_phi words") {
  CHECK(family_phi(1).twists == std::vector<Twist>{Twist{Curve{CurveKind::A, 1}, 1}});
  CHECK(family_phi(2).twists == std::vector<Twist>{Twist{Curve{CurveKind::B, 2}, 1}, Twist{Curve{CurveKind::A, 2}, -1},
                                                    Twist{Curve{CurveKind::A, 1}, 1}});
  CHECK(family_phi(3).twists.size() == 5);
  CHECK(format_twist_word(family_phi(3)) == "Tb3 Ta3^-1 Tb2 Ta2^-1 Ta1");
  CHECK_THROWS(family_phi(0));
}

TEST_CASE("family_phi homology") {
  for (int g = 1; g <= 5; ++g) {
    CAPTURE(g);
    const IntMatrix co = cohomology_action(family_phi(g));
    const std::size_t n = co.rows();
    CHECK(co(0, 0) == 1);
    CHECK(co(0, 1) == 0);
    CHECK(co(1, 0) == 1);
    CHECK(co(1, 1) == 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i / 2 != j / 2) CHECK(co(i, j) == 0);
    for (int k = 2; k <= g; ++k) {
      IntMatrix b(2, 2, Integer(0));
      const std::size_t o = 2 * static_cast<std::size_t>(k - 1);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) b(i, j) = co(o + i, o + j);
      CHECK(char_poly(b) == LaurentPoly::parse("t^2 - 3*t + 1", VarSet{"t"}));
      CHECK(abs(det(b - identity_matrix(2))) == 1);
    }
    if (g >= 2) {
      IntMatrix lower(n - 2, n - 2, Integer(0));
      for (std::size_t i = 2; i < n; ++i)
        for (std::size_t j = 2; j < n; ++j) lower(i - 2, j - 2) = co(i, j);
      CHECK(nullity(lower - identity_matrix(n - 2)) == 0);
    }
    CHECK(nullity(co - identity_matrix(n)) == 1);
  }
  CHECK(h1_action(MappingClass(3, {})) == identity_matrix(6));
}

TEST_CASE("mapping class endos") {
  for (int g = 1; g <= 3; ++g) {
    MappingClass mc = family_phi(g);
    FreeEndo e = mapping_class_endo(mc);
    FreeEndo ei = mapping_class_endo_inverse(mc);
    const std::size_t n = 2 * static_cast<std::size_t>(g);
    CHECK(compose(e, ei) == FreeEndo::identity(n));
    CHECK(compose(ei, e) == FreeEndo::identity(n));
    CHECK(abelianize(e) == h1_action(mc));
    CHECK(abelianize(ei) * h1_action(mc) == identity_matrix(n));
    CHECK(h1_action(mc.inverse()) == abelianize(ei));
  }
}

TEST_CASE("twist word parsing") {
  CHECK(parse_twist_word("Tb2 Ta2^-1 Ta1", 2) == family_phi(2));
  CHECK(parse_twist_word("", 2).twists.empty());
  CHECK(parse_twist_word("  Ta1  ", 1) == family_phi(1));
  CHECK_THROWS_AS(parse_twist_word("Ta3", 2), ParseError);
  CHECK_THROWS_AS(parse_twist_word("Tc1", 2), ParseError);
  CHECK_THROWS_AS(parse_twist_word("Ta1^2", 2), ParseError);
  CHECK_THROWS_AS(parse_twist_word("Ta0", 2), ParseError);
  CHECK_THROWS(MappingClass(1, {Twist{Curve{CurveKind::A, 2}, 1}}));
}

TEST_CASE("property: twist matrices are symplectic with det 1") {
  auto g = fibtest::rng(21);
  for (int c = 0; c < fibtest::kCases; ++c) {
    const int genus = static_cast<int>(fibtest::uniform(g, 1, 3));
    MappingClass mc = random_class(g, genus, 6);
    IntMatrix m = h1_action(mc);
    IntMatrix j = symplectic_j(genus);
    CHECK(m.transposed() * j * m == j);
    CHECK(det(m) == 1);
  }
}

TEST_CASE("property: pi1 action abelianizes to the H1 action") {
  auto g = fibtest::rng(22);
  for (int c = 0; c < fibtest::kCases; ++c) {
    const int genus = static_cast<int>(fibtest::uniform(g, 1, 3));
    MappingClass mc = random_class(g, genus, 6);
    CAPTURE(format_twist_word(mc));
    FreeEndo e = mapping_class_endo(mc);
    CHECK(abelianize(e) == h1_action(mc));
    SurfaceData s(genus);
    CHECK(are_conjugate(apply_endo(e, s.relator), s.relator));
    CHECK(compose(e, mapping_class_endo_inverse(mc)) == FreeEndo::identity(2 * static_cast<std::size_t>(genus)));
  }
}

TEST_CASE("property: twists about disjoint curves commute") {
  auto g = fibtest::rng(23);
  int checked = 0;
  for (int c = 0; checked < fibtest::kCases; ++c) {
    const int genus = static_cast<int>(fibtest::uniform(g, 2, 3));
    Twist x = random_twist(g, genus);
    Twist y = random_twist(g, genus);
    // The standard curves a_i, b_i meet once; every other pair is disjoint.
    if (x.curve.index == y.curve.index && x.curve.kind != y.curve.kind) continue;
    ++checked;
    SurfaceData s(genus);
    FreeEndo ex = dehn_twist_pi1(x.curve, x.sign, s);
    FreeEndo ey = dehn_twist_pi1(y.curve, y.sign, s);
    CHECK(compose(ex, ey) == compose(ey, ex));
    IntMatrix hx = dehn_twist_h1(x.curve, x.sign, genus);
    IntMatrix hy = dehn_twist_h1(y.curve, y.sign, genus);
    CHECK(hx * hy == hy * hx);
    // Same curve, opposite signs cancel.
    CHECK(compose(ex, dehn_twist_pi1(x.curve, -x.sign, s)) == FreeEndo::identity(2 * static_cast<std::size_t>(genus)));
  }
}

TEST_CASE("property: twist word text round-trips") {
  auto g = fibtest::rng(24);
  for (int c = 0; c < fibtest::kCases; ++c) {
    const int genus = static_cast<int>(fibtest::uniform(g, 1, 4));
    MappingClass mc = random_class(g, genus, 8);
    CHECK(parse_twist_word(format_twist_word(mc), genus) == mc);
    CHECK(mc.inverse().inverse() == mc);
  }
}
