#pragma once

#include <string>

#include "json.hpp"
#include "modelkit/factorisation.hpp"
#include "modelkit/model.hpp"
#include "modelkit/report.hpp"

namespace modelkit {

/* Key order is part of the output contract, so everything serializes
 * through ordered JSON. */
using Json = nlohmann::ordered_json;

/* {"name": ..., "objects": [labels], "le": ["a<=b", ...]} with the full set
 * of non-identity comparable pairs. */
Json lattice_to_json(const Lattice& lat);

/* Accepts a catalog name or an inline lattice object. Throws ParseError on
 * unknown names or malformed objects. */
LatticePtr lattice_from_json(const Json& j);

/* Arrays of "a<=b" literals in map-index order, identities included. */
Json map_class_to_json(const MapClass& k);
/* Accepts "a<=b" strings or ["a","b"] pairs; identities are inserted
 * whether or not they are listed. */
MapClass map_class_from_json(const LatticePtr& lat, const Json& j);

Json object_set_to_json(const ObjectSet& s);

/* {"lattice": ..., "left": [...], "right": [...]} */
Json fs_to_json(const FactorisationSystem& fs);

/* {"lattice": ..., "C": [...], "W": [...], "F": [...]}. The lattice is the
 * catalog name when the structure lives on a catalog lattice, an inline
 * object otherwise. */
Json model_to_json(const ModelStructure& m);

/* Loads and validates; throws ParseError when the triple is not a model
 * structure. */
ModelStructure model_from_json(const Json& j);

/* model_to_json plus left_proper/right_proper/fibrant/cofibrant. */
Json census_entry_to_json(const ModelStructure& m);

/* {"theorem": ..., "lattice": ..., ["base": ...,] "counts": {...},
 *  "bijection_ok": ..., "witnesses": [...]} */
Json report_to_json(const Report& r);

/* dump(2) with a trailing newline — the one serialization used for files. */
std::string to_file_text(const Json& j);

}  // namespace modelkit
