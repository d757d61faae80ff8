#include "arcbrick/quotients.hpp"

#include <nlohmann/json.hpp>

#include "arcbrick/errors.hpp"
#include "arcbrick/representation.hpp"

namespace arcbrick {

MonomialIdealSpec::MonomialIdealSpec(std::vector<Path> generators) : generators_(std::move(generators)) {
  for (const auto& p : generators_)
    if (p.length() == 0) throw PreconditionError("ideal generators must be nonempty paths");
}

MonomialIdealSpec MonomialIdealSpec::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("ideal is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("ideal must be a JSON list of path strings");
  std::vector<Path> generators;
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError("ideal generators must be strings");
    generators.push_back(Path::parse(item.get<std::string>()));
  }
  return MonomialIdealSpec(std::move(generators));
}

void MonomialIdealSpec::require_fits(int n) const {
  for (const auto& p : generators_)
    if (p.max_vertex() > n) {
      throw PreconditionError("generator '" + p.to_string() + "' uses vertices beyond v" +
                              std::to_string(n));
    }
}

MonomialIdealSpec two_cycle_ideal(int n) {
  std::vector<Path> gens;
  for (int i = 1; i < n; ++i) {
    gens.emplace_back(std::vector<Arrow>{{i, false}, {i, true}});
    gens.emplace_back(std::vector<Arrow>{{i, true}, {i, false}});
  }
  return MonomialIdealSpec(std::move(gens));
}

MonomialIdealSpec linear_orientation_ideal(int n) {
  std::vector<Path> gens;
  for (int i = 1; i < n; ++i) gens.emplace_back(std::vector<Arrow>{{i, true}});
  return MonomialIdealSpec(std::move(gens));
}

MonomialIdealSpec radical_square_ideal(int n) {
  std::vector<Path> gens;
  const auto arrows = all_arrows(n);
  for (const Arrow& a : arrows)
    for (const Arrow& b : arrows)
      if (a.target() == b.source()) gens.emplace_back(std::vector<Arrow>{a, b});
  return MonomialIdealSpec(std::move(gens));
}

bool arc_annihilated(const Arc& alpha, int n, const MonomialIdealSpec& ideal) {
  ideal.require_fits(n);
  const Representation m = arc_module(alpha, n);
  for (const auto& p : ideal.generators())
    if (!path_action_is_zero(m, p)) return false;
  return true;
}

std::vector<NoncrossingDiagram> nad_ideal_filter(int n, const MonomialIdealSpec& ideal) {
  ideal.require_fits(n);
  if (n > kMaxDiagramRank) {
    throw CapExceeded("diagram enumeration capped at rank " + std::to_string(kMaxDiagramRank));
  }
  std::vector<Arc> killed;
  for (const Arc& a : enumerate_arcs(n))
    if (arc_annihilated(a, n, ideal)) killed.push_back(a);
  std::vector<NoncrossingDiagram> out;
  for_each_noncrossing(killed, [&](std::span<const Arc> arcs) {
    out.emplace_back(n, std::vector<Arc>(arcs.begin(), arcs.end()));
  });
  return out;
}

bool is_right_arc(const Arc& alpha) { return alpha.above_mask() == 0; }

bool is_alternating_arc(const Arc& alpha) {
  // Same side at every even point, the opposite side at every odd point.
  for (int m = alpha.left() + 1; m + 1 < alpha.right(); ++m)
    if (alpha.side(m) == alpha.side(m + 1)) return false;
  return true;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Nad: return "nad";
    case Family::Rnad: return "rnad";
    case Family::Anad: return "anad";
    case Family::Custom: return "custom";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "nad") return Family::Nad;
  if (text == "rnad") return Family::Rnad;
  if (text == "anad") return Family::Anad;
  if (text == "custom") return Family::Custom;
  throw ParseError("unknown family '" + std::string(text) + "'");
}

std::uint64_t family_count(int n, Family family, const std::optional<MonomialIdealSpec>& ideal) {
  if (n < 1) throw PreconditionError("rank must be >= 1");
  if (n > kMaxCountRank) throw CapExceeded("counts capped at rank " + std::to_string(kMaxCountRank));
  std::vector<Arc> allowed;
  for (const Arc& a : enumerate_arcs(n)) {
    bool ok = true;
    switch (family) {
      case Family::Nad: break;
      case Family::Rnad: ok = is_right_arc(a); break;
      case Family::Anad: ok = is_alternating_arc(a); break;
      case Family::Custom:
        if (!ideal) throw PreconditionError("custom family needs an ideal");
        ok = arc_annihilated(a, n, *ideal);
        break;
    }
    if (ok) allowed.push_back(a);
  }
  std::uint64_t count = 0;
  for_each_noncrossing(allowed, [&](std::span<const Arc>) { ++count; });
  return count;
}

}  // namespace arcbrick
