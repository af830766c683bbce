#pragma once

#include <string>
#include <vector>

#include "phg/complex.hpp"
#include "phg/filtration.hpp"
#include "phg/graph.hpp"
#include "phg/persistence.hpp"

namespace phg {

// On-disk formats. Infinite deaths serialize as the string "inf"; the
// in-memory representation never uses a float sentinel.

// {"vertices": [v0, ...], "edges": [[u, v, value], ...]}; when the
// assignment has no explicit edge values the lower-star extension is written.
std::string filtration_to_json(const Graph& g, const FiltrationAssignment& f);
FiltrationAssignment filtration_from_json(const std::string& text, const Graph& g);

// [{"vertices": [...], "value": v}, ...] in filtration order.
std::string complex_to_json(const FilteredComplex& c);
FilteredComplex complex_from_json(const std::string& text);

// {"dim": d, "points": [[birth, death-or-"inf", multiplicity], ...]}
std::string diagram_to_json(const PersistenceDiagram& d);
PersistenceDiagram diagram_from_json(const std::string& text);

// Array of diagram objects, one per dimension.
std::string diagrams_to_json(const std::vector<PersistenceDiagram>& diags);
std::vector<PersistenceDiagram> diagrams_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace phg
