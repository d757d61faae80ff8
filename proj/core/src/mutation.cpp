#include "arcbrick/mutation.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "arcbrick/errors.hpp"
#include "arcbrick/string_hom.hpp"

namespace arcbrick {

std::string to_string(MutationDirection direction) {
  return direction == MutationDirection::Left ? "left" : "right";
}

Arc half_twist(const Arc& pivot, const Arc& other, MutationDirection direction) {
  const bool share_left = pivot.left() == other.left();
  const bool share_right = pivot.right() == other.right();
  const bool pivot_left_of_other = pivot.right() == other.left();
  const bool pivot_right_of_other = pivot.left() == other.right();
  const int shared_count = int{share_left} + int{share_right} + int{pivot_left_of_other} +
                           int{pivot_right_of_other};
  if (shared_count != 1) {
    throw PreconditionError("half twist needs arcs sharing exactly one endpoint: " +
                            pivot.to_string() + ", " + other.to_string());
  }

  int shared;
  int pivot_end;
  int other_end;
  if (share_left) {
    shared = pivot.left();
    pivot_end = pivot.right();
    other_end = other.right();
  } else if (share_right) {
    shared = pivot.right();
    pivot_end = pivot.left();
    other_end = other.left();
  } else if (pivot_left_of_other) {
    shared = pivot.right();
    pivot_end = pivot.left();
    other_end = other.right();
  } else {
    shared = pivot.left();
    pivot_end = pivot.right();
    other_end = other.left();
  }

  const int lo = std::min(pivot_end, other_end);
  const int hi = std::max(pivot_end, other_end);
  std::vector<int> above;
  for (int m = lo + 1; m < hi; ++m) {
    Side side;
    if (m == shared) {
      const bool left_twist = direction == MutationDirection::Left;
      side = (pivot_left_of_other == left_twist) ? Side::Above : Side::Below;
    } else if (pivot.has_interior(m)) {
      side = pivot.side(m);
    } else if (other.has_interior(m)) {
      side = other.side(m);
    } else {
      throw InconsistencyError("half twist: point " + std::to_string(m) + " lies on neither arc");
    }
    if (side == Side::Above) above.push_back(m);
  }
  return Arc(lo, hi, above);
}

ColoredDiagram mutate_dad(const ColoredDiagram& d, int i, std::optional<MutationDirection> direction) {
  const int n = d.rank();
  if (i < 1 || i > n) {
    throw PreconditionError("mutation position " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n));
  }
  const ColoredArc& pivot = d.at(i);
  const MutationDirection inferred =
      pivot.color == Color::Green ? MutationDirection::Left : MutationDirection::Right;
  if (direction && *direction != inferred) {
    throw PreconditionError(to_string(*direction) + " mutation at position " + std::to_string(i) +
                            " needs a " + (*direction == MutationDirection::Left ? "green" : "red") +
                            " arc, found " + to_string(pivot.color));
  }
  const Permutation w = underlying_permutation(d);
  auto value = [&](int position) { return w.at(position); };

  std::vector<ColoredArc> entries = d.entries();
  auto& centre = entries[static_cast<std::size_t>(i - 1)];
  centre.color = pivot.color == Color::Green ? Color::Red : Color::Green;
  if (i > 1) {
    auto& e = entries[static_cast<std::size_t>(i - 2)];
    e.arc = half_twist(pivot.arc, e.arc, inferred);
    e.color = value(i - 1) < value(i + 1) ? Color::Red : Color::Green;
  }
  if (i < n) {
    auto& e = entries[static_cast<std::size_t>(i)];
    e.arc = half_twist(pivot.arc, e.arc, inferred);
    e.color = value(i) < value(i + 2) ? Color::Red : Color::Green;
  }
  return ColoredDiagram(n, std::move(entries));
}

TwoTermCollection::TwoTermCollection(int n, std::vector<ShiftedModule> members)
    : n_(n), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.module.rank() != n) throw PreconditionError("collection member of the wrong rank");
    if (m.shift != 0 && m.shift != 1) throw PreconditionError("2-term members have shift 0 or 1");
  }
}

TwoTermCollection psi(const ColoredDiagram& d) {
  std::vector<ShiftedModule> members;
  for (const auto& e : d.entries()) {
    members.push_back({arc_module(e.arc, d.rank()), e.color == Color::Green ? 0 : 1});
  }
  return TwoTermCollection(d.rank(), std::move(members));
}

namespace {

// |det| of an integer matrix via exact elimination.
Rational determinant(Matrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::string member_name(int position, const ShiftedModule& m) {
  std::string dims;
  for (int x : m.module.dims().entries()) dims += std::to_string(x);
  return "X" + std::to_string(position) + "[dims " + dims + ", shift " + std::to_string(m.shift) + "]";
}

}  // namespace

SmcReport smc_axiom_report(const TwoTermCollection& x) {
  SmcReport report;
  const auto& members = x.members();
  auto fail = [&](bool& flag, std::string why) {
    if (flag) {
      flag = false;
      if (report.failure.empty()) report.failure = std::move(why);
    }
  };
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (!is_brick(members[j].module)) {
      fail(report.sm1, "sm1: " + member_name(static_cast<int>(j + 1), members[j]) + " is not a brick");
    }
  }
  for (std::size_t j = 0; j < members.size(); ++j)
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (j == k) continue;
      const auto& a = members[j];
      const auto& b = members[k];
      const std::string pair = member_name(static_cast<int>(j + 1), a) + " -> " +
                               member_name(static_cast<int>(k + 1), b);
      if (a.shift == b.shift) {
        if (hom_dim(a.module, b.module) != 0) fail(report.sm2, "sm2: Hom " + pair + " is nonzero");
      } else if (a.shift == 0) {
        if (ext1_dim(a.module, b.module) != 0) fail(report.sm2, "sm2: Ext^1 " + pair + " is nonzero");
        if (hom_dim(a.module, b.module) != 0) fail(report.sm3, "sm3: Hom " + pair + "[-1] is nonzero");
      }
    }

  const std::size_t n = static_cast<std::size_t>(x.rank());
  if (members.size() != n) {
    fail(report.sm4, "sm4: " + std::to_string(members.size()) + " members for rank " +
                         std::to_string(n));
  } else {
    Matrix signed_dims(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t v = 0; v < n; ++v) {
        const int d = members[j].module.dims().entries()[v];
        signed_dims(j, v) = members[j].shift == 0 ? d : -d;
      }
    const Rational det = determinant(signed_dims);
    if (det != 1 && det != -1) {
      fail(report.sm4, "sm4: signed dimension vectors have determinant " + to_string(det));
    }
  }
  return report;
}

bool smc_axiom_check(const TwoTermCollection& x) { return smc_axiom_report(x).ok(); }

bool smc_leq(const ColoredDiagram& du, const ColoredDiagram& dw) {
  if (du.rank() != dw.rank()) throw PreconditionError("rank mismatch");
  for (const auto& g : du.entries()) {
    if (g.color != Color::Green) continue;
    for (const auto& r : dw.entries())
      if (r.color == Color::Red && graph_map_count(g.arc, r.arc) != 0) return false;
  }
  return true;
}

namespace {

std::optional<Morphism> find_injection(const Representation& from, const Representation& to) {
  const auto basis = hom_basis(from, to);
  for (const auto& f : basis)
    if (f.is_injective()) return f;
  if (basis.size() < 2) return std::nullopt;
  std::mt19937_64 rng(0x1e7);
  std::uniform_int_distribution<long> coefficient(1, 1'000'003);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs.emplace_back(coefficient(rng));
    std::vector<Matrix> phi;
    for (int v = 1; v <= from.rank(); ++v) {
      Matrix c = Matrix::zero(static_cast<std::size_t>(to.dim(v)), static_cast<std::size_t>(from.dim(v)));
      for (std::size_t k = 0; k < basis.size(); ++k) c = c + basis[k].component(v).scaled(coeffs[k]);
      phi.push_back(std::move(c));
    }
    Morphism g(from, to, std::move(phi));
    if (g.is_injective()) return g;
  }
  return std::nullopt;
}

// Middle term E of the non-split extension 0 -> pivot -> E -> neighbor -> 0,
// located by trying every arc with the summed dimension vector.
Representation extension_middle(const Representation& pivot, const Representation& neighbor) {
  const int n = pivot.rank();
  const DimVector target = pivot.dims() + neighbor.dims();
  std::vector<Representation> found;
  for (const Arc& beta : enumerate_arcs(n)) {
    Representation e = arc_module(beta, n);
    if (e.dims() != target) continue;
    const auto inj = find_injection(pivot, e);
    if (!inj) continue;
    if (is_isomorphic(morphism_parts(*inj).cokernel, neighbor)) found.push_back(std::move(e));
  }
  if (found.size() != 1) {
    throw InconsistencyError("expected a unique extension middle term, found " +
                             std::to_string(found.size()));
  }
  return std::move(found.front());
}

}  // namespace

TwoTermCollection mutate_smc_modules(const TwoTermCollection& x, int i) {
  const int n = x.rank();
  if (i < 1 || i > static_cast<int>(x.members().size())) {
    throw PreconditionError("mutation position " + std::to_string(i) + " out of range");
  }
  const ShiftedModule& pivot = x.at(i);
  if (pivot.shift != 0) {
    throw PreconditionError("left mutation of a 2-term collection needs a pivot in degree 0");
  }
  std::vector<ShiftedModule> out;
  for (int j = 1; j <= static_cast<int>(x.members().size()); ++j) {
    const ShiftedModule& member = x.at(j);
    if (j == i) {
      out.push_back({member.module, 1});
      continue;
    }
    if (member.shift == 0) {
      const int e = ext1_dim(member.module, pivot.module);
      if (e == 0) {
        out.push_back(member);
      } else if (e == 1) {
        out.push_back({extension_middle(pivot.module, member.module), 0});
      } else {
        throw InconsistencyError("approximation of X" + std::to_string(j) + " has multiplicity " +
                                 std::to_string(e));
      }
      continue;
    }
    const auto basis = hom_basis(member.module, pivot.module);
    if (basis.empty()) {
      out.push_back(member);
    } else if (basis.size() == 1) {
      const Morphism& f = basis.front();
      if (f.is_injective()) {
        out.push_back({morphism_parts(f).cokernel, 0});
      } else if (f.is_surjective()) {
        out.push_back({morphism_parts(f).kernel, 1});
      } else {
        throw InconsistencyError("approximation of X" + std::to_string(j) +
                                 " is neither injective nor surjective");
      }
    } else {
      throw InconsistencyError("approximation of X" + std::to_string(j) + " has multiplicity " +
                               std::to_string(basis.size()));
    }
  }
  return TwoTermCollection(n, std::move(out));
}

MutationGraph hasse(int n) {
  if (n < 1) throw PreconditionError("rank must be >= 1");
  if (n > kMaxHasseRank) {
    throw CapExceeded("mutation graph capped at rank " + std::to_string(kMaxHasseRank));
  }
  MutationGraph g{n, {}, all_permutations(n), {}};
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < g.labels.size(); ++k) {
    g.vertices.push_back(double_diagram(g.labels[k]));
    index.emplace(g.labels[k].word(), k);
  }
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    const ColoredDiagram& d = g.vertices[k];
    for (int i = 1; i <= n; ++i) {
      if (d.at(i).color != Color::Green) continue;
      ColoredDiagram next = mutate_dad(d, i, MutationDirection::Left);
      const auto it = index.find(underlying_permutation(next).word());
      if (it == index.end() || !(g.vertices[it->second] == next)) {
        throw InconsistencyError("mutation left the set of double arc diagrams");
      }
      g.edges.push_back({k, it->second, i});
    }
  }
  return g;
}

}  // namespace arcbrick
