#ifndef LOCGAL_JSON_IO_HPP
#define LOCGAL_JSON_IO_HPP

#include <json.hpp>

#include "locgal/chain.hpp"
#include "locgal/functor_data.hpp"
#include "locgal/group.hpp"
#include "locgal/gset.hpp"
#include "locgal/preorder.hpp"
#include "locgal/report.hpp"
#include "locgal/site.hpp"

namespace locgal {

using nlohmann::json;

// Loaders throw ValidationError with a location-bearing message on malformed
// input. Emitters produce normalized documents that re-load to equal values.

json preorder_to_json(const Preorder& p);
Preorder preorder_from_json(const json& j, std::size_t* closure_added = nullptr);

json site_to_json(const Site& s);
/// `closure_added`, when non-null, receives how many base-order pairs the
/// reflexive/transitive closure introduced on load.
Site site_from_json(const json& j, std::size_t* closure_added = nullptr);

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);
/// Accepts a builtin name string or a full group document.
GroupPtr group_ref_from_json(const json& j);

json gset_to_json(const GSet& x);
GSet gset_from_json(const json& j);

json chain_to_json(const GroupChain& c);
GroupChain chain_from_json(const json& j);

json functor_to_json(const FunctorData& f);
FunctorData functor_from_json(const json& j);

json point_to_json(const Site& s, const LocalePoint& p);
json frame_element_to_json(const FrameElement& e);

json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

/// FNV-1a digest of a canonical serialization, for the report header.
uint64_t digest(const std::string& text);

}  // namespace locgal

#endif
