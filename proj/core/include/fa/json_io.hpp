#ifndef FA_JSON_IO_HPP
#define FA_JSON_IO_HPP

#include "fa/facalc.hpp"

#include <json.hpp>

namespace fa {

using json = nlohmann::ordered_json;

/* All readers throw std::invalid_argument on malformed input. */

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

json irr_to_json(const IrrDecomposition& d);
IrrDecomposition irr_from_json(const json& j);

json virtual_fb_to_json(const VirtualFB& v);
VirtualFB virtual_fb_from_json(const json& j);

json bimod_to_json(const VirtualFBBimod& b);
VirtualFBBimod bimod_from_json(const json& j);

json fb_module_to_json(const FBModuleData& f);
FBModuleData fb_module_from_json(const json& j);

} // namespace fa

#endif
