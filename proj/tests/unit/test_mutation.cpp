#include <gtest/gtest.h>

#include <random>

#include "arcbrick/arc.hpp"
#include "arcbrick/errors.hpp"
#include "arcbrick/mutation.hpp"
#include "oracles.hpp"

using namespace arcbrick;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
Representation S(const Arc& a, int n) { return arc_module(a, n); }

void expect_same_members(const TwoTermCollection& x, const TwoTermCollection& y) {
  ASSERT_EQ(x.members().size(), y.members().size());
  for (int p = 1; p <= static_cast<int>(x.members().size()); ++p) {
    EXPECT_EQ(x.at(p).shift, y.at(p).shift) << "position " << p;
    EXPECT_TRUE(is_isomorphic(x.at(p).module, y.at(p).module)) << "position " << p;
  }
}

}  // namespace

TEST(HalfTwist, Examples) {
  EXPECT_EQ(half_twist(Arc(1, 2), Arc(2, 3)), Arc(1, 3, {2}));
  EXPECT_EQ(half_twist(Arc(3, 4), Arc(2, 3)), Arc(2, 4));
  // Nested at a shared right endpoint: point 2 follows the longer arc.
  EXPECT_EQ(half_twist(Arc(3, 6, {4}), Arc(1, 6, {3, 4})), Arc(1, 3));
  EXPECT_EQ(half_twist(Arc(3, 6, {4}), Arc(1, 6, {2, 3, 4})), Arc(1, 3, {2}));
  EXPECT_THROW(half_twist(Arc(1, 2), Arc(3, 4)), PreconditionError);
  EXPECT_THROW(half_twist(Arc(1, 3), Arc(1, 3, {2})), PreconditionError);
}

TEST(HalfTwist, RightTwistMirrorsTheSharedPoint) {
  EXPECT_EQ(half_twist(Arc(1, 2), Arc(2, 3), MutationDirection::Right), Arc(1, 3));
  EXPECT_EQ(half_twist(Arc(3, 4), Arc(2, 3), MutationDirection::Right), Arc(2, 4, {3}));
}

TEST(MutateDad, Examples) {
  const auto d = mutate_dad(double_diagram(P("4321")), 3, MutationDirection::Left);
  EXPECT_EQ(d, double_diagram(P("4312")));
  EXPECT_EQ(d.at(3).arc, Arc(1, 2));
  EXPECT_EQ(d.at(3).color, Color::Red);
  EXPECT_EQ(d.at(2).arc, Arc(1, 3, {2}));
  EXPECT_EQ(d.at(2).color, Color::Green);

  const auto e = mutate_dad(double_diagram(P("4321")), 1, MutationDirection::Left);
  EXPECT_EQ(e, double_diagram(P("3421")));
  EXPECT_EQ(e.at(1).arc, Arc(3, 4));
  EXPECT_EQ(e.at(1).color, Color::Red);
  EXPECT_EQ(e.at(2).arc, Arc(2, 4));
  EXPECT_EQ(e.at(2).color, Color::Green);
}

TEST(MutateDad, Preconditions) {
  const auto id = double_diagram(Permutation::identity(3));
  EXPECT_THROW(mutate_dad(id, 1, MutationDirection::Left), PreconditionError);
  EXPECT_THROW(mutate_dad(id, 0), PreconditionError);
  EXPECT_THROW(mutate_dad(id, 4), PreconditionError);
  EXPECT_NO_THROW(mutate_dad(id, 1, MutationDirection::Right));
}

TEST(MutateDad, CommutesWithSimpleReflections) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : oracle::words(n))
      for (int i = 1; i <= n; ++i) {
        auto v = w;
        std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
        const auto got = mutate_dad(double_diagram(oracle::perm(w)), i);
        EXPECT_TRUE(oracle::same(got, oracle::double_diagram(v)))
            << oracle::perm(w).to_string() << " at " << i;
      }
}

TEST(MutateDad, LeftAndRightAreInverse) {
  for (const auto& w : all_permutations(4)) {
    const auto d = double_diagram(w);
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(mutate_dad(mutate_dad(d, i), i), d);
  }
}

TEST(Psi, Examples) {
  const auto x = psi(double_diagram(P("312")));
  EXPECT_EQ(x.at(1).shift, 0);
  EXPECT_EQ(x.at(1).module, S(Arc(1, 3, {2}), 2));
  EXPECT_EQ(x.at(2).shift, 1);
  EXPECT_EQ(x.at(2).module, S(Arc(1, 2), 2));

  const auto id = psi(double_diagram(Permutation::identity(3)));
  const auto top = psi(double_diagram(Permutation::longest(3)));
  for (int p = 1; p <= 3; ++p) {
    EXPECT_EQ(id.at(p).shift, 1);
    EXPECT_EQ(id.at(p).module, Representation::simple(3, p));
    EXPECT_EQ(top.at(p).shift, 0);
    // w0 = 4321 lists the simples from v3 down to v1.
    EXPECT_EQ(top.at(p).module, Representation::simple(3, 4 - p));
  }
}

TEST(Psi, ShiftZeroPartIsTheGreenDiagram) {
  for (const auto& w : all_permutations(4)) {
    const auto d = double_diagram(w);
    const auto x = psi(d);
    for (int p = 1; p <= 4; ++p) {
      EXPECT_EQ(x.at(p).shift == 0, d.at(p).color == Color::Green);
      EXPECT_EQ(x.at(p).module, S(d.at(p).arc, 4));
    }
  }
}

TEST(SmcAxioms, HoldOnEveryDoubleDiagram) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto report = smc_axiom_report(psi(double_diagram(w)));
      EXPECT_TRUE(report.ok()) << w.to_string() << ": " << report.failure;
    }
}

TEST(SmcAxioms, Counterexamples) {
  const auto s1 = Representation::simple(2, 1);
  const TwoTermCollection twice(2, {{s1, 0}, {s1, 1}});
  const auto r = smc_axiom_report(twice);
  EXPECT_FALSE(r.sm4);
  EXPECT_FALSE(smc_axiom_check(twice));

  const TwoTermCollection hom(2, {{s1, 0}, {S(Arc(1, 3), 2), 0}});
  const auto h = smc_axiom_report(hom);
  EXPECT_FALSE(h.sm2);
  EXPECT_FALSE(smc_axiom_check(hom));

  const TwoTermCollection nonbrick(2, {{Representation(2, DimVector({1, 1})), 0}, {s1, 1}});
  EXPECT_FALSE(smc_axiom_report(nonbrick).sm1);
}

TEST(SmcLeq, Examples) {
  EXPECT_TRUE(smc_leq(double_diagram(P("132")), double_diagram(P("312"))));
  EXPECT_FALSE(smc_leq(double_diagram(P("213")), double_diagram(P("312"))));
  for (const auto& w : all_permutations(3)) EXPECT_TRUE(smc_leq(double_diagram(w), double_diagram(w)));
}

TEST(SmcLeq, AgreesWithWeakOrder) {
  for (int n = 1; n <= 3; ++n) {
    const auto ws = oracle::words(n);
    for (const auto& u : ws)
      for (const auto& w : ws)
        EXPECT_EQ(smc_leq(double_diagram(oracle::perm(u)), double_diagram(oracle::perm(w))), oracle::leq(u, w));
  }
}

TEST(MutateSmcModules, Examples) {
  const auto got = mutate_smc_modules(psi(double_diagram(P("321"))), 1);
  EXPECT_EQ(got.at(1).shift, 1);
  EXPECT_TRUE(is_isomorphic(got.at(1).module, Representation::simple(2, 2)));
  EXPECT_EQ(got.at(2).shift, 0);
  EXPECT_TRUE(is_isomorphic(got.at(2).module, S(Arc(1, 3), 2)));
  expect_same_members(got, psi(double_diagram(P("231"))));

  const auto cok = mutate_smc_modules(psi(double_diagram(P("312"))), 1);
  EXPECT_EQ(cok.at(2).shift, 0);
  EXPECT_TRUE(is_isomorphic(cok.at(2).module, Representation::simple(2, 2)));
  expect_same_members(cok, psi(double_diagram(P("132"))));
}

TEST(MutateSmcModules, FarMembersAreUnchanged) {
  const auto x = psi(double_diagram(P("54321")));
  const auto y = mutate_smc_modules(x, 1);
  EXPECT_EQ(y.at(3).module, x.at(3).module);
  EXPECT_EQ(y.at(4).module, x.at(4).module);
}

TEST(MutateSmcModules, RequiresDegreeZeroPivot) {
  EXPECT_THROW(mutate_smc_modules(psi(double_diagram(P("123"))), 1), PreconditionError);
}

TEST(MutateSmcModules, MatchesDiagramMutation) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : all_permutations(n))
      for (int i : descents(w))
        expect_same_members(mutate_smc_modules(psi(double_diagram(w)), i),
                            psi(double_diagram(left_multiply_simple(i, w))));
  std::mt19937_64 rng(7);
  const auto ps = all_permutations(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& w = ps[std::uniform_int_distribution<std::size_t>(1, ps.size() - 1)(rng)];
    const auto ds = descents(w);
    const int i = ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)];
    expect_same_members(mutate_smc_modules(psi(double_diagram(w)), i),
                        psi(double_diagram(left_multiply_simple(i, w))));
  }
}

TEST(Hasse, Sizes) {
  EXPECT_EQ(hasse(1).vertices.size(), 2U);
  EXPECT_EQ(hasse(1).edges.size(), 1U);
  EXPECT_EQ(hasse(2).vertices.size(), 6U);
  EXPECT_EQ(hasse(2).edges.size(), 6U);
  EXPECT_EQ(hasse(3).vertices.size(), 24U);
  EXPECT_EQ(hasse(3).edges.size(), 36U);
  EXPECT_THROW(hasse(7), CapExceeded);
}

TEST(Hasse, EdgesAreWeakOrderCovers) {
  const auto g = hasse(3);
  for (const auto& e : g.edges) {
    const auto& from = g.labels[e.from];
    const auto& to = g.labels[e.to];
    EXPECT_EQ(to, left_multiply_simple(e.position, from));
    EXPECT_EQ(from.length(), to.length() + 1);
    EXPECT_TRUE(oracle::leq(to.word(), from.word()));
  }
}
