#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hcrep/hccell/cell.hpp"
#include "hcrep/hcpair/pair.hpp"
#include "hcrep/verdict.hpp"

namespace hcrep::cli {

using nlohmann::json;
using rootsys::Root;
using rootsys::RootSystem;

/// Cartan matrix, symmetrizer, simple roots, every root in enumeration order
/// (label, coefficients, height), and delta.
json root_system_json(const RootSystem& rs);

json labels_json(const std::vector<Root>& roots);
json verdict_json(const Verdict& v);
json inclusion_json(const hccell::InclusionStats& s);

/// Inverse of LatticeVector::label: "a+2b", "-a-b", "c". Throws InvalidInput
/// unless the result is a root of rs.
Root parse_root(const RootSystem& rs, std::string_view label);

/// Comma-separated root labels, as a positive system of the full system.
rootsys::PositiveSystem parse_positive_system(const RootSystem& rs, std::string_view text);

/// Cartan matrix from JSON: a bare matrix, a type string such as "A1xA1", or
/// an object with a "cartan" field holding either.
rootsys::CartanMatrix cartan_from_json(const json& j);

}  // namespace hcrep::cli
