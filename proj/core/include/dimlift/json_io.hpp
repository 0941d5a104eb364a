#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dimlift/boolsem.hpp"
#include "dimlift/lift.hpp"
#include "dimlift/oracle.hpp"
#include "dimlift/poset.hpp"
#include "dimlift/pss.hpp"

namespace dimlift {

// Every parser throws ParseError, with "line L, column C" for syntax errors.
// Rationals are always written as strings "p" or "p/q".

/// { "elements": [names...], "covers": [[a, b], ...] }
Poset parse_poset(std::string_view text);
std::string poset_to_json(const Poset& p);

/// { "poset": {...}, "arity": {name: m}, "arrows": {"x<y": [[atom image members]...]} }
/// Arrows are given on cover pairs; any other listed pair must match the composite.
SemDiagram parse_diagram(std::string_view text);
std::string diagram_to_json(const SemDiagram& d);

/// { "components": [[labels...], ...] }
PssSpace parse_space(std::string_view text);
std::string space_to_json(const PssSpace& s);

/// { "src": space, "tgt": space, "matrix": [["p/q", ...], ...] }
PssHom parse_hom(std::string_view text);
std::string hom_to_json(const PssHom& h);

/// { "vars": [...], "eq": [...], "ge": [...], "gt": [...] }, each form
/// { "terms": {var: "p/q"}, "const": "p/q" }.
LinSystem parse_lin_system(std::string_view text);
std::string lin_system_to_json(const LinSystem& s);

/// Lifting with its verification certificate.
std::string lift_to_json(const SemDiagram& phi, const LiftResult& lift, std::uint64_t seed, std::size_t max_dim);

/// True iff the document has a "poset" member (a diagram rather than a bare poset).
bool looks_like_diagram(std::string_view text);

/// Cover graph with nodes annotated "2^m" (and "/ dim d" when a lifting is given).
std::string diagram_to_dot(const SemDiagram& d, const LiftResult* lift = nullptr);

}  // namespace dimlift
