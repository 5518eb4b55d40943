#pragma once

#include <json.hpp>

#include "hq/cohomology.hpp"
#include "hq/coloring.hpp"
#include "hq/diagram.hpp"
#include "hq/hquandle.hpp"
#include "hq/invariant.hpp"
#include "hq/multiset.hpp"
#include "hq/quandle.hpp"

namespace hq {

using json = nlohmann::ordered_json;

// Readers raise ErrorKind::structural on malformed input.
json parse_json_text(const std::string& text);

json quandle_to_json(const Quandle& q);
Quandle quandle_from_json(const json& j);

json group_to_json(const GroupTable& g);
GroupTable group_from_json(const json& j);

json hquandle_to_json(const HierarchicalQuandle& h);
HierarchicalQuandle hquandle_from_json(const json& j);

json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

json verify_report_to_json(const VerifyReport& r);
json diagram_report_to_json(const DiagramReport& r);

json multiset_to_json(const Multiset<long long>& m);

json matrix_to_json(const SparseIntMatrix& m, const ChainBasis& row_basis,
                    const ChainBasis& col_basis);

json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const json& j, int x_size, int y_size);

json cohomology_to_json(const CohomologyResult& r, bool with_representatives);

json invariant_to_json(const InvariantValue& v, bool flatten_only);

json decompose_to_json(const DecomposeResult& r);

} // namespace hq
