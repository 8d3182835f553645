#pragma once

#include "crkit/grassmann.hpp"
#include "crkit/mostow.hpp"

#include <json.hpp>

#include <string>

namespace crkit::serialize {

/// All emitters use ordered_json so key order (and therefore the dumped
/// bytes) is fixed by construction.
using ordered_json = nlohmann::ordered_json;

std::string verdict_name(roots::Verdict v);

ordered_json to_json(const exact::Scalar& s);      // canonical string form
ordered_json to_json(const exact::ExactMatrix& m); // nested arrays of strings
ordered_json to_json(const exact::Signature& s);
ordered_json to_json(const grassmann::OrbitDescriptor& d);
ordered_json to_json(const grassmann::OrbitReport& r);
ordered_json to_json(const grassmann::DualityEntry& e);
ordered_json to_json(const levi::LeviReport& r);
ordered_json to_json(const levi::PseudoconcavityEstimate& e);
ordered_json to_json(const levi::CohomologyWindow& w);
ordered_json to_json(const mostow::MostowProbeReport& r);

/// CSV projections of the integral/boolean orbit data; booleans as 0/1,
/// fields with commas quoted.
std::string orbit_csv_header();
std::string orbit_csv_row(const grassmann::OrbitReport& r);
std::string duality_csv_header();
std::string duality_csv_row(const grassmann::DualityEntry& e);

} // namespace crkit::serialize
