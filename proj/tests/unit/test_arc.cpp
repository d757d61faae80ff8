#include <gtest/gtest.h>

#include <set>

#include "arcbrick/arc.hpp"
#include "arcbrick/errors.hpp"
#include "oracles.hpp"

using namespace arcbrick;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::set<Arc> green_set(const char* w) {
  const auto g = green_diagram(P(w));
  return {g.arcs().begin(), g.arcs().end()};
}

std::set<Arc> red_set(const char* w) {
  const auto r = red_diagram(P(w));
  return {r.arcs().begin(), r.arcs().end()};
}

}  // namespace

TEST(Arc, ValidatesAndPrints) {
  const Arc a(1, 7, {4, 6});
  EXPECT_EQ(a.to_string(), "arc(1,7;2v,3v,4^,5v,6^)");
  EXPECT_EQ(a.side(4), Side::Above);
  EXPECT_EQ(a.side(5), Side::Below);
  EXPECT_EQ(a.above_points(), (std::vector<int>{4, 6}));
  EXPECT_EQ(Arc(2, 3).to_string(), "arc(2,3)");
  EXPECT_THROW(Arc(3, 3), PreconditionError);
  EXPECT_THROW(Arc(0, 2), PreconditionError);
  EXPECT_THROW(Arc(1, 3, {3}), PreconditionError);
  EXPECT_THROW(a.side(7), PreconditionError);
  EXPECT_EQ(Arc::from_mask(1, 7, 0b10100), a);
}

TEST(DoubleDiagram, EightPointExample) {
  EXPECT_EQ(green_set("53271468"), (std::set<Arc>{Arc(3, 5, {4}), Arc(2, 3), Arc(1, 7, {4, 6})}));
  EXPECT_EQ(red_set("53271468"),
            (std::set<Arc>{Arc(2, 7, {4, 6}), Arc(1, 4), Arc(4, 6), Arc(6, 8)}));
}

TEST(DoubleDiagram, IdentityAndLongest) {
  const auto d = double_diagram(Permutation::identity(3));
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(d.at(i).arc, Arc(i, i + 1));
    EXPECT_EQ(d.at(i).color, Color::Red);
  }
  EXPECT_TRUE(green_diagram(Permutation::identity(3)).empty());
  EXPECT_TRUE(red_diagram(P("4321")).empty());
}

TEST(DoubleDiagram, RankTwoExample) {
  EXPECT_EQ(green_set("312"), (std::set<Arc>{Arc(1, 3, {2})}));
  EXPECT_EQ(red_set("312"), (std::set<Arc>{Arc(1, 2)}));
}

TEST(DoubleDiagram, MatchesOracleAndReadsBack) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : oracle::words(n)) {
      const auto d = double_diagram(oracle::perm(w));
      EXPECT_TRUE(oracle::same(d, oracle::double_diagram(w))) << oracle::perm(w).to_string();
      EXPECT_EQ(underlying_permutation(d).word(), w);
    }
}

TEST(DoubleDiagram, RejectsMalformedDiagrams) {
  EXPECT_THROW(ColoredDiagram(2, {{Arc(1, 2), Color::Red}}), PreconditionError);
  EXPECT_THROW(ColoredDiagram(2, {{Arc(1, 2), Color::Red}, {Arc(1, 2), Color::Green}}), PreconditionError);
  EXPECT_THROW(ColoredDiagram(2, {{Arc(1, 4), Color::Red}, {Arc(1, 2), Color::Green}}), PreconditionError);
  // Chain broken: position 2 must continue from value 2.
  const ColoredDiagram broken(3, {{Arc(1, 2), Color::Red}, {Arc(3, 4), Color::Red}, {Arc(2, 3), Color::Red}});
  EXPECT_THROW(underlying_permutation(broken), PreconditionError);
  // Wrong color for the values it joins.
  const ColoredDiagram miscolored(2, {{Arc(1, 2), Color::Red}, {Arc(2, 3), Color::Green}});
  EXPECT_THROW(underlying_permutation(miscolored), PreconditionError);
}

TEST(Crossing, Examples) {
  EXPECT_TRUE(is_crossing(Arc(1, 3, {2}), Arc(2, 4, {3})));
  EXPECT_FALSE(is_crossing(Arc(1, 3), Arc(3, 5)));
  EXPECT_TRUE(is_crossing(Arc(1, 4, {3}), Arc(2, 3)));
  EXPECT_THROW(is_crossing(Arc(1, 3), Arc(1, 3)), PreconditionError);
}

TEST(Crossing, IsSymmetric) {
  const auto arcs = enumerate_arcs(4);
  for (const Arc& a : arcs)
    for (const Arc& b : arcs)
      if (a != b) EXPECT_EQ(is_crossing(a, b), is_crossing(b, a));
}

TEST(Crossing, DisjointSpansNeverCross) {
  for (const Arc& a : enumerate_arcs(5))
    for (const Arc& b : enumerate_arcs(5))
      if (a.right() <= b.left()) EXPECT_FALSE(is_crossing(a, b));
}

TEST(CheckNad, Examples) {
  EXPECT_FALSE(check_nad(std::vector<Arc>{Arc(1, 3, {2}), Arc(1, 2)}));
  EXPECT_TRUE(check_nad(std::vector<Arc>{Arc(2, 8, {5, 7}), Arc(3, 4), Arc(4, 6, {5})}));
  EXPECT_TRUE(check_nad(std::vector<Arc>{}));
  EXPECT_FALSE(check_nad(std::vector<Arc>{Arc(1, 3), Arc(2, 3)}));
  EXPECT_TRUE(check_nad(std::vector<Arc>{Arc(1, 2), Arc(2, 3)}));
}

TEST(JoinIrreducible, Examples) {
  EXPECT_EQ(arc_to_join_irreducible(Arc(1, 3, {2}), 2), P("312"));
  EXPECT_EQ(arc_to_join_irreducible(Arc(1, 3), 2), P("231"));
  EXPECT_EQ(arc_to_join_irreducible(Arc(1, 2), 2), P("213"));
  EXPECT_THROW(arc_to_join_irreducible(Arc(1, 4), 2), PreconditionError);
}

TEST(JoinIrreducible, GreenDiagramIsTheArc) {
  for (int n = 1; n <= 5; ++n)
    for (const Arc& a : enumerate_arcs(n)) {
      const auto j = arc_to_join_irreducible(a, n);
      EXPECT_EQ(descents(j).size(), 1U);
      EXPECT_EQ(green_diagram(j).arcs(), std::vector<Arc>{a});
    }
}

TEST(DiagramToPermutation, Examples) {
  EXPECT_EQ(diagram_to_permutation(NoncrossingDiagram(2, {Arc(1, 2), Arc(2, 3)})), P("321"));
  EXPECT_EQ(diagram_to_permutation(NoncrossingDiagram(2, {})), Permutation::identity(2));
  EXPECT_EQ(diagram_to_permutation(NoncrossingDiagram(2, {Arc(1, 3)})), P("231"));
}

TEST(DiagramToPermutation, InvertsGreenDiagram) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) EXPECT_EQ(diagram_to_permutation(green_diagram(w)), w);
}

TEST(Enumeration, ArcCounts) {
  EXPECT_EQ(enumerate_arcs(1).size(), 1U);
  EXPECT_EQ(enumerate_arcs(2).size(), 4U);
  EXPECT_EQ(enumerate_arcs(3).size(), 11U);
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t single = 0;
    if (n <= 6)
      for (const auto& w : oracle::words(n)) {
        int d = 0;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) d += w[k] > w[k + 1];
        single += d == 1;
      }
    EXPECT_EQ(arc_count(n), enumerate_arcs(n).size());
    if (n <= 6) EXPECT_EQ(arc_count(n), single);
  }
  const auto arcs = enumerate_arcs(4);
  EXPECT_TRUE(std::is_sorted(arcs.begin(), arcs.end()));
  EXPECT_EQ(std::set<Arc>(arcs.begin(), arcs.end()).size(), arcs.size());
  EXPECT_THROW(enumerate_arcs(21), CapExceeded);
  EXPECT_THROW(enumerate_arcs(0), PreconditionError);
}

TEST(Enumeration, NoncrossingDiagramsAreCountedByFactorial) {
  EXPECT_EQ(enumerate_nad(1).size(), 2U);
  EXPECT_EQ(enumerate_nad(3).size(), 24U);
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t count = 0;
    for_each_nad(n, [&](std::span<const Arc> arcs) {
      ++count;
      EXPECT_TRUE(check_nad(arcs));
    });
    EXPECT_EQ(count, oracle::factorial(n + 1));
  }
  EXPECT_THROW(enumerate_nad(9), CapExceeded);
}

TEST(Enumeration, GreenDiagramsAreExactlyTheNoncrossingDiagrams) {
  for (int n = 1; n <= 4; ++n) {
    std::set<NoncrossingDiagram> green;
    for (const auto& w : all_permutations(n)) green.insert(green_diagram(w));
    const auto all = enumerate_nad(n);
    EXPECT_EQ(green, std::set<NoncrossingDiagram>(all.begin(), all.end()));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(Enumeration, RedDiagramsAreNoncrossingToo) {
  for (int n = 1; n <= 5; ++n) {
    std::set<NoncrossingDiagram> red;
    for (const auto& w : all_permutations(n)) red.insert(red_diagram(w));
    EXPECT_EQ(red.size(), oracle::factorial(n + 1));
  }
}
