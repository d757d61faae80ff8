#pragma once

// JSON and DOT forms of the library's values.
//
//   Arc             {"left":p,"right":q,"above":[m,...]}
//   colored entry   Arc fields plus "color":"green"|"red"
//   Representation  {"dims":[...],"arrows":{"a1":[[...]],"a1-":[[...]],...}}
//                   with every matrix entry a rational string "p" or "p/q"
//   collection      {"n":n,"members":[{"position":i,"shift":s,"dims":...,
//                    "arrows":...}]}, members built from arcs also carry the
//                    colored-entry fields
//
// Objects keep insertion order so output is byte-stable.

#include <nlohmann/json.hpp>
#include <string>

#include "arcbrick/arc.hpp"
#include "arcbrick/mutation.hpp"
#include "arcbrick/representation.hpp"

namespace arcbrick {

using Json = nlohmann::ordered_json;

Json to_json(const Arc& a);
Json to_json(const ColoredArc& e);
Json to_json(const NoncrossingDiagram& g);
/// {"arcs":[colored entries by position],"n":n,"perm":"..."}
Json to_json(const ColoredDiagram& d);
Json to_json(const Representation& m);
Json to_json(const TwoTermCollection& x);
/// Like to_json(psi(d)) but each member also carries its arc, color and
/// arrow sequence.
Json collection_json(const ColoredDiagram& d);

/// Throw ParseError on malformed input.
Arc arc_from_json(const Json& j);
ColoredDiagram colored_diagram_from_json(const Json& j);
Representation representation_from_json(const Json& j);

/// digraph with one node per vertex (labelled by its permutation) and edges
/// labelled "mu<i>".
std::string to_dot(const MutationGraph& g);

}  // namespace arcbrick
