#pragma once

#include <optional>
#include <string>

#include "dposet/complex.hpp"
#include "dposet/depth_poset.hpp"
#include "dposet/filter.hpp"
#include "dposet/matrix.hpp"

namespace dposet {

// Complex plus optional filter as loaded from disk. `filter` is absent when
// the file carries no values and no separate filter file was given.
struct Instance {
  LefschetzComplex complex;
  std::optional<Filter> filter;
};

// JSON layout:
//   {"cells":[{"id":0,"dim":0,"label":"a","value":0.0},...],
//    "incidence":[[facet_id,cofacet_id],...]}
// Labels are optional; values must be present on all cells or none. A
// separate filter file holds {"values":[...]} indexed by cell id. Structural
// problems and invariant violations throw std::invalid_argument with the
// first offence, naming cells by label. With `perturb`, tied filter values
// are resolved via break_ties before validation.
Instance parse_instance(const std::string& complex_json,
                        const std::string& filter_json = "",
                        bool perturb = false);
Instance load_instance(const std::string& path,
                       const std::string& filter_path = "",
                       bool perturb = false);

// Canonical JSON for a complex and filter; load(serialize(..)) is identical,
// values round-tripping bit-exactly.
std::string serialize_instance(const LefschetzComplex& complex,
                               const Filter& filter);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// Hasse diagram as a DOT digraph, nodes ordered by birth value and labeled
// "(birth,death) p=<dim>".
std::string emit_dot(const DepthPoset& poset, const LefschetzComplex& complex);

// Pairs plus closure and Hasse edge lists as JSON.
std::string emit_closure_json(const DepthPoset& poset,
                              const LefschetzComplex& complex);

// Point rows `birth_value,death_value,dim,pair_id`, then Hasse edge rows
// under a second header `pair_id_from,pair_id_to`. Header-only when the
// poset is empty.
std::string emit_diagram_csv(const DepthPoset& poset);

// Static persistence-diagram rendering with one arc per Hasse edge.
std::string emit_diagram_svg(const DepthPoset& poset,
                             const LefschetzComplex& complex);

// Debug views of the ordered boundary matrix, positions annotated with cell
// labels and filter values.
std::string dump_matrix_ascii(const OrderedBoundaryMatrix& matrix);
std::string dump_matrix_sparse(const OrderedBoundaryMatrix& matrix);

}  // namespace dposet
