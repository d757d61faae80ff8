#include <gtest/gtest.h>

#include "arcbrick/arc.hpp"
#include "arcbrick/errors.hpp"
#include "arcbrick/representation.hpp"
#include "arcbrick/string_hom.hpp"

using namespace arcbrick;

TEST(ArrowSequence, Examples) {
  EXPECT_EQ(arrow_sequence(Arc(1, 7, {4, 6})).to_string(), "a1 a2 a3- a4 a5-");
  EXPECT_EQ(arrow_sequence(Arc(3, 4)).to_string(), "e3");
  EXPECT_TRUE(arrow_sequence(Arc(3, 4)).is_idempotent());
  EXPECT_EQ(arrow_sequence(Arc(1, 3, {2})).to_string(), "a1-");
  EXPECT_EQ(arrow_sequence(Arc(1, 5)).length(), 3U);
}

TEST(ArrowSequence, RejectsGaps) {
  EXPECT_THROW(ArrowSequence(1, 3, {Arrow{1, false}, Arrow{3, false}}), PreconditionError);
  EXPECT_THROW(ArrowSequence(1, 2, {}), PreconditionError);
}

TEST(Factorizations, Examples) {
  using K = FactorizationKind;
  // Ordered by (|b|, |c|): the idempotent middle comes first.
  const auto q = factorizations(Arc(1, 3), K::Quotient);
  ASSERT_EQ(q.size(), 2U);
  EXPECT_EQ(q[0].middle.to_string(), "e1");
  EXPECT_TRUE(q[0].before.empty());
  EXPECT_EQ(q[0].after, (std::vector<Arrow>{{1, false}}));
  EXPECT_EQ(q[1].middle.to_string(), "a1");
  EXPECT_TRUE(q[1].before.empty() && q[1].after.empty());

  const auto s = factorizations(Arc(1, 3, {2}), K::Submodule);
  ASSERT_EQ(s.size(), 2U);
  EXPECT_EQ(s[0].middle.to_string(), "e1");
  EXPECT_EQ(s[0].after, (std::vector<Arrow>{{1, true}}));
  EXPECT_EQ(s[1].middle.to_string(), "a1-");

  // A direct letter cannot follow a quotient middle on the right of a1-.
  const auto none = factorizations(Arc(1, 3, {2}), K::Quotient);
  ASSERT_EQ(none.size(), 2U);
  EXPECT_EQ(none[0].middle.to_string(), "a1-");
  EXPECT_EQ(none[1].middle.to_string(), "e2");
  EXPECT_EQ(none[1].before, (std::vector<Arrow>{{1, true}}));

  const auto e = factorizations(Arc(2, 3), K::Quotient);
  ASSERT_EQ(e.size(), 1U);
  EXPECT_EQ(e[0].middle.to_string(), "e2");
}

TEST(Factorizations, PiecesReassemble) {
  for (const Arc& a : enumerate_arcs(5))
    for (auto kind : {FactorizationKind::Quotient, FactorizationKind::Submodule})
      for (const auto& f : factorizations(a, kind)) {
        std::vector<Arrow> all = f.before;
        all.insert(all.end(), f.middle.letters().begin(), f.middle.letters().end());
        all.insert(all.end(), f.after.begin(), f.after.end());
        EXPECT_EQ(all, arrow_sequence(a).letters());
      }
}

TEST(GraphMaps, Examples) {
  EXPECT_EQ(graph_map_count(Arc(1, 3), Arc(1, 2)), 1);
  EXPECT_EQ(graph_map_count(Arc(1, 2), Arc(1, 3)), 0);
  EXPECT_EQ(graph_map_count(Arc(1, 2), Arc(3, 4)), 0);
  for (const Arc& a : enumerate_arcs(5)) EXPECT_EQ(graph_map_count(a, a), 1);
}

TEST(GraphMaps, CountEqualsHomDimension) {
  for (int n = 1; n <= 4; ++n) {
    const auto arcs = enumerate_arcs(n);
    for (const Arc& a : arcs)
      for (const Arc& b : arcs)
        EXPECT_EQ(graph_map_count(a, b), hom_dim(arc_module(a, n), arc_module(b, n)))
            << a.to_string() << " -> " << b.to_string();
  }
}

TEST(GraphMaps, MaterializeGivesMorphisms) {
  const int n = 4;
  for (const Arc& a : enumerate_arcs(n))
    for (const Arc& b : enumerate_arcs(n))
      for (const auto& g : graph_maps(a, b)) {
        const Morphism f = materialize(g, a, b, n);
        EXPECT_FALSE(f.is_zero());
      }
}

TEST(GraphMaps, NoncrossingPairsAreOrthogonal) {
  const int n = 4;
  const auto arcs = enumerate_arcs(n);
  for (const Arc& a : arcs)
    for (const Arc& b : arcs) {
      if (a == b) continue;
      const bool nad = check_nad(std::vector<Arc>{a, b});
      EXPECT_EQ(nad, graph_map_count(a, b) == 0 && graph_map_count(b, a) == 0);
    }
}
