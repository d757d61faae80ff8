#include <gtest/gtest.h>

#include "arcbrick/arc.hpp"
#include "arcbrick/errors.hpp"
#include "arcbrick/representation.hpp"

using namespace arcbrick;

namespace {

const Arrow a1{1, false};
const Arrow a1m{1, true};

Matrix one() {
  Matrix m(1, 1);
  m(0, 0) = 1;
  return m;
}

Representation S(const Arc& a, int n) { return arc_module(a, n); }

}  // namespace

TEST(DimVector, Forms) {
  EXPECT_EQ(bilinear(DimVector({1, 0}), DimVector({0, 1})), -1);
  EXPECT_EQ(quad(DimVector({1, 1, 1, 1})), 2);
  EXPECT_EQ(quad(DimVector({0, 0, 0})), 0);
  EXPECT_EQ(quad(DimVector({1, 2, 1})), 4);
  EXPECT_THROW(bilinear(DimVector({1}), DimVector({1, 0})), PreconditionError);
  EXPECT_THROW(DimVector({-1}), PreconditionError);
}

TEST(DimVector, QuadMatchesClosedForm) {
  // q(x) = x_1^2 + sum (x_i - x_{i+1})^2 + x_n^2
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const int q = a * a + (a - b) * (a - b) + (b - c) * (b - c) + c * c;
        EXPECT_EQ(quad(DimVector({a, b, c})), q);
      }
}

TEST(ArcModule, EightPointExample) {
  const auto m = S(Arc(1, 7, {4, 6}), 6);
  EXPECT_EQ(m.dims(), DimVector({1, 1, 1, 1, 1, 1}));
  // a1, a2 direct; a3^- (v4 -> v3); a4 direct; a5^- (v6 -> v5).
  EXPECT_EQ(m.map({1, false}), one());
  EXPECT_EQ(m.map({2, false}), one());
  EXPECT_EQ(m.map({3, true}), one());
  EXPECT_EQ(m.map({4, false}), one());
  EXPECT_EQ(m.map({5, true}), one());
  EXPECT_TRUE(m.map({3, false}).is_zero());
  EXPECT_TRUE(m.map({1, true}).is_zero());
  EXPECT_TRUE(check_relations(m));
}

TEST(ArcModule, UnitArcIsSimple) {
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(S(Arc(k, k + 1), 3), Representation::simple(3, k));
}

TEST(ArcModule, SideRule) {
  const auto m = S(Arc(1, 3, {2}), 2);
  EXPECT_EQ(m.dims(), DimVector({1, 1}));
  EXPECT_TRUE(m.map(a1).is_zero());
  EXPECT_EQ(m.map(a1m), one());
}

TEST(Relations, Examples) {
  Representation bad(2, DimVector({1, 1}));
  bad.set_map(a1, one());
  bad.set_map(a1m, one());
  EXPECT_FALSE(check_relations(bad));
  EXPECT_EQ(relation_at(bad, 1)(0, 0), Rational(-1));
  EXPECT_TRUE(check_relations(Representation::zero(3)));
  for (int n = 1; n <= 5; ++n)
    for (const Arc& a : enumerate_arcs(n)) EXPECT_TRUE(check_relations(S(a, n))) << a.to_string();
}

TEST(Representation, RejectsWrongShapes) {
  Representation m(2, DimVector({1, 2}));
  EXPECT_THROW(m.set_map(a1, Matrix(1, 1)), PreconditionError);
  EXPECT_NO_THROW(m.set_map(a1, Matrix(2, 1)));
  EXPECT_THROW(m.map({2, false}), PreconditionError);
}

TEST(Hom, Examples) {
  EXPECT_EQ(hom_dim(S(Arc(1, 3), 2), S(Arc(1, 2), 2)), 1);
  EXPECT_EQ(hom_dim(S(Arc(1, 2), 2), S(Arc(1, 3), 2)), 0);
  EXPECT_EQ(hom_dim(S(Arc(1, 2), 3), S(Arc(3, 4), 3)), 0);
  for (const Arc& a : enumerate_arcs(4)) EXPECT_EQ(hom_dim(S(a, 4), S(a, 4)), 1);
}

TEST(Hom, BasisElementsAreMorphisms) {
  const auto arcs = enumerate_arcs(3);
  for (const Arc& a : arcs)
    for (const Arc& b : arcs) {
      const auto basis = hom_basis(S(a, 3), S(b, 3));
      for (const auto& f : basis) EXPECT_FALSE(f.is_zero());
    }
}

TEST(Morphism, RejectsNonCommutingMaps) {
  const auto m = S(Arc(1, 3), 2);  // a1 : v1 -> v2
  std::vector<Matrix> phi{one(), Matrix(1, 1)};
  EXPECT_THROW(Morphism(m, m, phi), PreconditionError);
}

TEST(MorphismParts, Examples) {
  const auto src = S(Arc(1, 2), 2);
  const auto tgt = S(Arc(1, 3, {2}), 2);
  const auto basis = hom_basis(src, tgt);
  ASSERT_EQ(basis.size(), 1U);
  EXPECT_TRUE(basis[0].is_injective());
  const auto parts = morphism_parts(basis[0]);
  EXPECT_EQ(parts.kernel.dims().total(), 0);
  EXPECT_TRUE(is_isomorphic(parts.cokernel, Representation::simple(2, 2)));

  const auto id = morphism_parts(Morphism::identity(tgt));
  EXPECT_EQ(id.kernel.dims().total(), 0);
  EXPECT_EQ(id.cokernel.dims().total(), 0);

  const auto zero = morphism_parts(Morphism::zero(src, tgt));
  EXPECT_TRUE(is_isomorphic(zero.kernel, src));
  EXPECT_TRUE(is_isomorphic(zero.cokernel, tgt));
}

TEST(MorphismParts, Exactness) {
  const auto arcs = enumerate_arcs(3);
  for (const Arc& a : arcs)
    for (const Arc& b : arcs)
      for (const auto& f : hom_basis(S(a, 3), S(b, 3))) {
        const auto p = morphism_parts(f);
        EXPECT_EQ(p.kernel.dims() + p.image.dims(), f.source().dims());
        EXPECT_EQ(p.image.dims() + p.cokernel.dims(), f.target().dims());
        EXPECT_TRUE(check_relations(p.kernel));
        EXPECT_TRUE(check_relations(p.cokernel));
      }
}

TEST(Ext, Examples) {
  EXPECT_EQ(ext1_dim(Representation::simple(2, 1), Representation::simple(2, 2)), 1);
  for (const Arc& a : enumerate_arcs(4)) EXPECT_EQ(ext1_dim(S(a, 4), S(a, 4)), 0);
  // Disjoint, noncrossing, no shared endpoint.
  EXPECT_EQ(ext1_dim(S(Arc(1, 2), 4), S(Arc(3, 5), 4)), 0);
  EXPECT_EQ(ext1_dim(S(Arc(2, 3), 4), S(Arc(1, 5, {2, 3}), 4)), 0);
}

TEST(Ext, DisjointNoncrossingArcsHaveNoExtensions) {
  const auto arcs = enumerate_arcs(4);
  for (const Arc& a : arcs)
    for (const Arc& b : arcs) {
      if (a == b || a.has_endpoint(b.left()) || a.has_endpoint(b.right()) || is_crossing(a, b)) continue;
      EXPECT_EQ(ext1_dim(S(a, 4), S(b, 4)), 0) << a.to_string() << " " << b.to_string();
    }
}

TEST(Bricks, Examples) {
  for (const Arc& a : enumerate_arcs(4)) EXPECT_TRUE(is_brick(S(a, 4)));
  EXPECT_FALSE(is_brick(Representation(2, DimVector({1, 1}))));
  EXPECT_FALSE(is_brick(Representation::zero(2)));
}

TEST(Bricks, GreenDiagramsGiveSemibricks) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) {
      std::vector<Representation> mods;
      for (const Arc& a : green_diagram(w).arcs()) mods.push_back(S(a, n));
      EXPECT_TRUE(is_semibrick(mods)) << w.to_string();
    }
  std::vector<Representation> pair{S(Arc(1, 3), 2), S(Arc(1, 2), 2)};
  EXPECT_FALSE(is_semibrick(pair));
}

TEST(PathAction, Examples) {
  EXPECT_FALSE(path_action_is_zero(S(Arc(1, 4), 3), Path::parse("a1 a2")));
  EXPECT_TRUE(path_action_is_zero(S(Arc(1, 3, {2}), 2), Path::parse("a1 a1-")));
  EXPECT_FALSE(path_action_is_zero(S(Arc(1, 3, {2}), 2), Path::parse("e2")));
  EXPECT_THROW(path_action_is_zero(S(Arc(1, 2), 1), Path::parse("a3")), PreconditionError);
}

TEST(Isomorphism, Examples) {
  const auto up = S(Arc(1, 3, {2}), 2);
  EXPECT_TRUE(is_isomorphic(up, up));
  EXPECT_FALSE(is_isomorphic(up, S(Arc(1, 3), 2)));
  EXPECT_FALSE(is_isomorphic(Representation::simple(2, 1), Representation::simple(2, 2)));
}

TEST(Isomorphism, DetectsChangeOfBasis) {
  // Two copies of S(arc(1,3)) written in different bases at v2.
  Representation x(2, DimVector({2, 2}));
  x.set_map(a1, Matrix::identity(2));
  Representation y(2, DimVector({2, 2}));
  Matrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  y.set_map(a1, swap);
  EXPECT_TRUE(check_relations(x));
  EXPECT_TRUE(is_isomorphic(x, y));
  Representation z(2, DimVector({2, 2}));
  Matrix half(2, 2);
  half(0, 0) = 1;
  z.set_map(a1, half);
  EXPECT_FALSE(is_isomorphic(x, z));
}
