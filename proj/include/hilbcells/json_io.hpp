#pragma once

#include "hilbcells/binforms.hpp"
#include "hilbcells/cells.hpp"
#include "hilbcells/hookcode.hpp"
#include "hilbcells/schubert.hpp"
#include "hilbcells/tmuj.hpp"

#include <json.hpp>

namespace hilbcells {

using json = nlohmann::json;

std::string rational_to_string(const Q& q);
Q rational_from_string(const std::string& s);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const HilbertFunction& T);
HilbertFunction hilbert_from_json(const json& j);

json to_json(const HookCode& d);
HookCode hookcode_from_json(const json& j);

json to_json(const BinaryForm& f);
BinaryForm form_from_json(const json& j);

json to_json(const FormSpace& v);
FormSpace space_from_json(const json& j);

json to_json(const CellParams& c);
CellParams params_from_json(const json& j);

json to_json(const SchubertClass& s);
SchubertClass schubert_from_json(const json& j);

json to_json(const TClass& c);
TClass tclass_from_json(const json& j);

std::vector<MonomialSpace> conditions_from_json(const json& j, int degree);

} // namespace hilbcells
