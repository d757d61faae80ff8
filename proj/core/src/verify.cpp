#include "arcbrick/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "arcbrick/arc.hpp"
#include "arcbrick/errors.hpp"
#include "arcbrick/mutation.hpp"
#include "arcbrick/quotients.hpp"
#include "arcbrick/representation.hpp"
#include "arcbrick/string_hom.hpp"

namespace arcbrick {

namespace {

constexpr std::size_t kSamples = 300;

// One rank of one check. `fail` records a counterexample.
struct Context {
  int n;
  bool sample;
  std::mt19937_64& rng;
  std::uint64_t cases = 0;
  std::optional<std::string> failure;

  bool fail(std::string what) {
    failure = std::move(what);
    return false;
  }

  std::size_t pick(std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
  }

  // Full range, or kSamples random indices in increasing order.
  std::vector<std::size_t> indices(std::size_t size) {
    std::vector<std::size_t> out;
    if (!sample || size <= kSamples) {
      out.resize(size);
      for (std::size_t k = 0; k < size; ++k) out[k] = k;
      return out;
    }
    for (std::size_t k = 0; k < kSamples; ++k) out.push_back(pick(size));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

using Body = std::function<bool(Context&)>;

struct Check {
  std::string suite;
  std::string name;
  int min_n;
  int max_n;           // checks with inherent limits stop there
  bool samples_above;  // sample beyond kMaxFullCheckRank
  Body body;
};

std::string pair_text(const Arc& a, const Arc& b) { return a.to_string() + ", " + b.to_string(); }

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t catalan(int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  return c;
}

// --- bijection -------------------------------------------------------------

bool green_diagrams_distinct(Context& c) {
  std::set<NoncrossingDiagram> seen;
  for (const auto& w : all_permutations(c.n)) {
    ++c.cases;
    const auto g = green_diagram(w);
    if (!check_nad(g.arcs())) return c.fail("green diagram of " + w.to_string() + " is not noncrossing");
    if (!seen.insert(g).second) return c.fail("green diagram of " + w.to_string() + " repeats");
  }
  const std::uint64_t nads = enumerate_nad(c.n).size();
  if (seen.size() != factorial(c.n + 1) || nads != factorial(c.n + 1)) {
    return c.fail(std::to_string(seen.size()) + " green diagrams, " + std::to_string(nads) +
                  " noncrossing diagrams, expected " + std::to_string(factorial(c.n + 1)));
  }
  return true;
}

bool round_trip(Context& c) {
  for (const auto& w : all_permutations(c.n)) {
    ++c.cases;
    const auto back = diagram_to_permutation(green_diagram(w));
    if (back != w) return c.fail(w.to_string() + " -> " + back.to_string());
    if (underlying_permutation(double_diagram(w)) != w) {
      return c.fail("double diagram of " + w.to_string() + " does not read back");
    }
  }
  return true;
}

bool canonical_join(Context& c) {
  for (const auto& w : all_permutations(c.n)) {
    ++c.cases;
    const auto g = green_diagram(w);
    const auto& arcs = g.arcs();
    std::vector<Permutation> joinands;
    for (const Arc& a : arcs) joinands.push_back(arc_to_join_irreducible(a, c.n));
    const std::size_t k = joinands.size();
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); ++subset) {
      Permutation v = Permutation::identity(c.n);
      for (std::size_t j = 0; j < k; ++j)
        if ((subset >> j) & 1U) v = join(v, joinands[j]);
      const bool full = subset + 1 == (std::uint64_t{1} << k);
      if (full && v != w) return c.fail("joinands of " + w.to_string() + " join to " + v.to_string());
      if (!full && (v == w || !weak_leq(v, w))) {
        return c.fail("a proper sub-join of " + w.to_string() + " gives " + v.to_string());
      }
    }
  }
  return true;
}

bool arc_classification(Context& c) {
  const auto arcs = enumerate_arcs(c.n);
  std::size_t single_descent = 0;
  for (const auto& w : all_permutations(c.n)) single_descent += descents(w).size() == 1;
  if (arcs.size() != arc_count(c.n) || arcs.size() != single_descent) {
    return c.fail(std::to_string(arcs.size()) + " arcs, " + std::to_string(single_descent) +
                  " single-descent permutations, formula " + std::to_string(arc_count(c.n)));
  }
  for (const Arc& a : arcs) {
    ++c.cases;
    const auto j = arc_to_join_irreducible(a, c.n);
    const auto g = green_diagram(j);
    if (descents(j).size() != 1 || g.arcs() != std::vector<Arc>{a}) {
      return c.fail(a.to_string() + " -> " + j.to_string());
    }
  }
  return true;
}

bool arc_bricks(Context& c) {
  for (const Arc& a : enumerate_arcs(c.n)) {
    ++c.cases;
    const auto m = arc_module(a, c.n);
    if (!check_relations(m)) return c.fail(a.to_string() + " violates the relations");
    if (!is_brick(m)) return c.fail(a.to_string() + " is not a brick");
    if (quad(m.dims()) != 2) return c.fail(a.to_string() + " has quad != 2");
    if (ext1_dim(m, m) != 0) return c.fail(a.to_string() + " has self-extensions");
  }
  return true;
}

// --- homs ------------------------------------------------------------------

struct ArcTable {
  std::vector<Arc> arcs;
  std::vector<Representation> modules;

  explicit ArcTable(int n) : arcs(enumerate_arcs(n)) {
    for (const Arc& a : arcs) modules.push_back(arc_module(a, n));
  }
};

bool graph_maps_match(Context& c) {
  const ArcTable t(c.n);
  const std::size_t m = t.arcs.size();
  for (std::size_t k : c.indices(m * m)) {
    const std::size_t i = k / m;
    const std::size_t j = k % m;
    ++c.cases;
    const auto maps = graph_maps(t.arcs[i], t.arcs[j]);
    const int hom = hom_dim(t.modules[i], t.modules[j]);
    if (static_cast<int>(maps.size()) != hom) {
      return c.fail(pair_text(t.arcs[i], t.arcs[j]) + ": " + std::to_string(maps.size()) +
                    " graph maps, hom dimension " + std::to_string(hom));
    }
    // The graph maps must be linearly independent morphisms.
    if (!maps.empty()) {
      std::vector<Matrix> flat;
      std::size_t len = 0;
      for (const auto& g : maps) {
        const Morphism f = materialize(g, t.arcs[i], t.arcs[j], c.n);
        std::vector<Rational> entries;
        for (const Matrix& comp : f.components())
          for (std::size_t r = 0; r < comp.rows(); ++r)
            for (std::size_t s = 0; s < comp.cols(); ++s) entries.push_back(comp(r, s));
        len = entries.size();
        Matrix col(entries.size(), 1);
        for (std::size_t r = 0; r < entries.size(); ++r) col(r, 0) = entries[r];
        flat.push_back(std::move(col));
      }
      Matrix stacked(len, 0);
      for (const auto& col : flat) stacked = Matrix::hstack(stacked, col);
      if (rank(stacked) != maps.size()) {
        return c.fail(pair_text(t.arcs[i], t.arcs[j]) + ": graph maps are linearly dependent");
      }
    }
  }
  return true;
}

bool orthogonality(Context& c) {
  const ArcTable t(c.n);
  const std::size_t m = t.arcs.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      ++c.cases;
      const Arc& a = t.arcs[i];
      const Arc& b = t.arcs[j];
      const int ab = hom_dim(t.modules[i], t.modules[j]);
      const int ba = hom_dim(t.modules[j], t.modules[i]);
      const Arc pair[] = {a, b};
      const bool nad = check_nad(pair);
      if (nad != (ab == 0 && ba == 0)) {
        return c.fail(pair_text(a, b) + ": noncrossing=" + (nad ? "yes" : "no") + ", homs " +
                      std::to_string(ab) + "/" + std::to_string(ba));
      }
      const bool same_left = a.left() == b.left();
      const bool same_right = a.right() == b.right();
      if (same_left && same_right) {
        if (ab == 0 || ba == 0) return c.fail(pair_text(a, b) + ": shared endpoints but a zero hom");
      } else if ((same_left || same_right) && !is_crossing(a, b)) {
        if (std::min(ab, ba) != 0 || std::max(ab, ba) != 1) {
          return c.fail(pair_text(a, b) + ": one shared endpoint, homs " + std::to_string(ab) + "/" +
                        std::to_string(ba));
        }
      }
    }
  return true;
}

bool semibricks(Context& c) {
  const ArcTable t(c.n);
  const std::size_t m = t.arcs.size();
  std::vector<std::uint64_t> orthogonal(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && hom_dim(t.modules[i], t.modules[j]) == 0 && hom_dim(t.modules[j], t.modules[i]) == 0)
        orthogonal[i] |= std::uint64_t{1} << j;
  std::set<std::vector<Arc>> found;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    ++c.cases;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      if ((subset >> i) & 1U) ok = (subset & ~(std::uint64_t{1} << i) & ~orthogonal[i]) == 0;
    if (!ok) continue;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < m; ++i)
      if ((subset >> i) & 1U) arcs.push_back(t.arcs[i]);
    found.insert(std::move(arcs));
  }
  std::set<std::vector<Arc>> green;
  for (const auto& w : all_permutations(c.n)) green.insert(green_diagram(w).arcs());
  if (found != green) {
    return c.fail(std::to_string(found.size()) + " semibricks of arc modules, " +
                  std::to_string(green.size()) + " green diagrams");
  }
  return true;
}

// --- mutation --------------------------------------------------------------

bool mutation_commutes(Context& c) {
  for (const auto& w : all_permutations(c.n)) {
    const auto d = double_diagram(w);
    for (int i = 1; i <= c.n; ++i) {
      ++c.cases;
      const auto dir = w.at(i) > w.at(i + 1) ? MutationDirection::Left : MutationDirection::Right;
      const auto expected = double_diagram(left_multiply_simple(i, w));
      if (mutate_dad(d, i, dir) != expected) {
        return c.fail(to_string(dir) + " mutation of D(" + w.to_string() + ") at " + std::to_string(i));
      }
      const auto wrong = dir == MutationDirection::Left ? MutationDirection::Right : MutationDirection::Left;
      try {
        mutate_dad(d, i, wrong);
        return c.fail(to_string(wrong) + " mutation of D(" + w.to_string() + ") at " + std::to_string(i) +
                      " was accepted");
      } catch (const PreconditionError&) {
      }
    }
  }
  return true;
}

bool smc_axioms(Context& c) {
  const auto perms = all_permutations(c.n);
  for (std::size_t k : c.indices(perms.size())) {
    ++c.cases;
    const auto report = smc_axiom_report(psi(double_diagram(perms[k])));
    if (!report.ok()) return c.fail("psi(D(" + perms[k].to_string() + ")): " + report.failure);
  }
  return true;
}

bool smc_module_mutation(Context& c) {
  const auto perms = all_permutations(c.n);
  std::vector<std::pair<std::size_t, int>> moves;
  for (std::size_t k = 0; k < perms.size(); ++k)
    for (int i : descents(perms[k])) moves.emplace_back(k, i);
  for (std::size_t idx : c.indices(moves.size())) {
    const auto [k, i] = moves[idx];
    const Permutation& w = perms[k];
    ++c.cases;
    const auto got = mutate_smc_modules(psi(double_diagram(w)), i);
    const auto want = psi(double_diagram(left_multiply_simple(i, w)));
    for (int p = 1; p <= c.n; ++p) {
      const auto& x = got.at(p);
      const auto& y = want.at(p);
      if (x.shift != y.shift || !is_isomorphic(x.module, y.module)) {
        return c.fail("mutating psi(D(" + w.to_string() + ")) at " + std::to_string(i) +
                      " differs at position " + std::to_string(p));
      }
    }
  }
  return true;
}

bool hasse_structure(Context& c) {
  const auto g = hasse(c.n);
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : g.edges) edges.emplace(g.labels[e.from].to_string(), g.labels[e.to].to_string());
  std::set<std::pair<std::string, std::string>> covers_down;
  for (const auto& w : all_permutations(c.n)) {
    ++c.cases;
    for (const auto& v : covers(w, CoverDirection::Down)) covers_down.emplace(w.to_string(), v.to_string());
  }
  if (g.vertices.size() != factorial(c.n + 1)) {
    return c.fail(std::to_string(g.vertices.size()) + " vertices");
  }
  if (edges.size() != g.edges.size() || edges != covers_down) {
    return c.fail("mutation graph edges differ from weak-order covers (" + std::to_string(g.edges.size()) +
                  " vs " + std::to_string(covers_down.size()) + ")");
  }
  return true;
}

// --- order -----------------------------------------------------------------

bool order_criterion(Context& c) {
  const auto perms = all_permutations(c.n);
  std::vector<ColoredDiagram> ds;
  for (const auto& w : perms) ds.push_back(double_diagram(w));
  const std::size_t m = perms.size();
  for (std::size_t k : c.indices(m * m)) {
    const std::size_t i = k / m;
    const std::size_t j = k % m;
    ++c.cases;
    if (smc_leq(ds[i], ds[j]) != weak_leq(perms[i], perms[j])) {
      return c.fail("u=" + perms[i].to_string() + ", w=" + perms[j].to_string());
    }
  }
  return true;
}

bool lattice_laws(Context& c) {
  const auto perms = all_permutations(c.n);
  const std::size_t m = perms.size();
  for (std::size_t k : c.indices(m * m)) {
    const Permutation& u = perms[k / m];
    const Permutation& w = perms[k % m];
    ++c.cases;
    const auto j = join(u, w);
    const auto mt = meet(u, w);
    if (!weak_leq(u, j) || !weak_leq(w, j) || !weak_leq(mt, u) || !weak_leq(mt, w)) {
      return c.fail("bounds fail for " + u.to_string() + ", " + w.to_string());
    }
    if (join(u, mt) != u || meet(u, j) != u) return c.fail("absorption fails for " + u.to_string() + ", " + w.to_string());
    // Least upper bound: no strictly smaller common upper bound among the
    // lower covers of the join.
    for (const auto& v : covers(j, CoverDirection::Down))
      if (weak_leq(u, v) && weak_leq(w, v)) return c.fail("join of " + u.to_string() + ", " + w.to_string() + " is not least");
    for (const auto& v : covers(mt, CoverDirection::Up))
      if (weak_leq(v, u) && weak_leq(v, w)) return c.fail("meet of " + u.to_string() + ", " + w.to_string() + " is not greatest");
  }
  return true;
}

// --- quotients -------------------------------------------------------------

bool two_cycle_filter(Context& c) {
  ++c.cases;
  const auto filtered = nad_ideal_filter(c.n, two_cycle_ideal(c.n));
  if (filtered != enumerate_nad(c.n)) {
    return c.fail(std::to_string(filtered.size()) + " diagrams survive the 2-cycle ideal");
  }
  return true;
}

bool rnad_catalan(Context& c) {
  ++c.cases;
  const auto count = family_count(c.n, Family::Rnad);
  if (count != catalan(c.n + 1)) return c.fail("RNAD count " + std::to_string(count));
  return true;
}

bool parity_vs_paths(Context& c) {
  const auto linear = linear_orientation_ideal(c.n);
  const auto rad2 = radical_square_ideal(c.n);
  for (const Arc& a : enumerate_arcs(c.n)) {
    ++c.cases;
    if (is_right_arc(a) != arc_annihilated(a, c.n, linear)) return c.fail(a.to_string() + ": right-arc test");
    if (is_alternating_arc(a) != arc_annihilated(a, c.n, rad2)) return c.fail(a.to_string() + ": alternating test");
  }
  return true;
}

bool anad_vs_rad2(Context& c) {
  ++c.cases;
  const auto parity = family_count(c.n, Family::Anad);
  const auto paths = family_count(c.n, Family::Custom, radical_square_ideal(c.n));
  if (parity != paths) return c.fail(std::to_string(parity) + " vs " + std::to_string(paths));
  return true;
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"bijection", "green-diagrams-distinct", 1, kMaxCheckRank, false, green_diagrams_distinct},
      {"bijection", "join-round-trip", 1, kMaxCheckRank, false, round_trip},
      {"bijection", "canonical-join", 1, kMaxCheckRank, false, canonical_join},
      {"bijection", "arc-classification", 1, kMaxCheckRank, false, arc_classification},
      {"bijection", "arc-bricks", 1, kMaxCheckRank, false, arc_bricks},
      {"homs", "graph-maps-vs-linear-algebra", 1, kMaxCheckRank, true, graph_maps_match},
      {"homs", "orthogonality-noncrossing", 1, kMaxFullCheckRank, false, orthogonality},
      {"homs", "semibricks", 1, 3, false, semibricks},
      {"mutation", "mutate-commutes", 1, kMaxCheckRank, false, mutation_commutes},
      {"mutation", "smc-axioms", 1, kMaxCheckRank, true, smc_axioms},
      {"mutation", "smc-module-mutation", 1, kMaxCheckRank, true, smc_module_mutation},
      {"mutation", "hasse-structure", 1, kMaxCheckRank, false, hasse_structure},
      {"order", "smc-leq-vs-weak", 1, kMaxCheckRank, true, order_criterion},
      {"order", "lattice-laws", 1, kMaxCheckRank, true, lattice_laws},
      {"quotients", "two-cycle-filter", 1, kMaxCheckRank, false, two_cycle_filter},
      {"quotients", "rnad-catalan", 1, kMaxCheckRank, false, rnad_catalan},
      {"quotients", "parity-vs-paths", 1, kMaxCheckRank, false, parity_vs_paths},
      {"quotients", "anad-vs-rad2", 1, kMaxCheckRank, false, anad_vs_rad2},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"bijection", "homs", "mutation", "order", "quotients"};
  return names;
}

std::vector<CheckResult> run_checks(std::string_view suite, int max_n, std::uint64_t seed) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw ParseError("unknown suite '" + std::string(suite) + "'");
  }
  if (max_n < 1) throw PreconditionError("max-n must be >= 1");
  if (max_n > kMaxCheckRank) throw CapExceeded("checks capped at rank " + std::to_string(kMaxCheckRank));

  std::vector<CheckResult> results;
  for (const auto& check : registry()) {
    if (suite != "all" && suite != check.suite) continue;
    CheckResult r;
    r.suite = check.suite;
    r.name = check.name;
    std::mt19937_64 rng(seed);
    for (int n = check.min_n; n <= std::min(max_n, check.max_n); ++n) {
      Context ctx{n, check.samples_above && n > kMaxFullCheckRank, rng, 0, std::nullopt};
      r.max_n = n;
      r.sampled |= ctx.sample;
      bool ok;
      try {
        ok = check.body(ctx);
      } catch (const Error& e) {
        ok = ctx.fail(std::string("exception: ") + e.what());
      }
      r.cases += ctx.cases;
      if (!ok) {
        r.passed = false;
        r.counterexample = "n=" + std::to_string(n) + ": " + ctx.failure.value_or("failed");
        break;
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace arcbrick
