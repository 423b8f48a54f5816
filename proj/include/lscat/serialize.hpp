#pragma once

#include <string>

#include <json.hpp>

#include "lscat/cover_verifier.hpp"
#include "lscat/orbit_classifier.hpp"
#include "lscat/realizations/clifford.hpp"

namespace lscat {

using Json = nlohmann::json;

// Fractions are written as strings "p/q" (or "p") so no precision is lost.
// Object keys come out sorted, and dump_json re-serializes parsed output
// byte for byte.
Json to_json(const Rat& r);
Json to_json(const QVec& v);
Json to_json(const QMat& m);
Json to_json(const QuatMatrix& m);
Json to_json(const CliffordElement& g);
Json to_json(const AffineIsometry& w);
Json to_json(const OrbitIdentification& id);
Json to_json(const CategoryValue& c);
Json to_json(const VertexOrbit& o);
Json to_json(const BoundReport& b);
Json to_json(const Counterexample& c);
/// Durations are included only when `with_timing` is set, so two runs of the
/// same plan serialize identically otherwise.
Json to_json(const VerifyReport& r, bool with_timing = false);

Json root_data_json(const RootSystem& rs);
Json marks_json(const RootSystem& rs);
Json alcove_json(const FundamentalAlcove& alcove, std::size_t group_cap = kDefaultGroupCap);
Json orbits_json(const RootSystem& rs);

/// Two-space indented JSON followed by a newline.
std::string dump_json(const Json& j);

// Plain-text renderings used by the command-line tool.
std::string root_data_text(const RootSystem& rs);
std::string marks_text(const RootSystem& rs);
std::string alcove_text(const FundamentalAlcove& alcove, std::size_t group_cap = kDefaultGroupCap);
std::string orbits_text(const RootSystem& rs);
std::string bound_text(const BoundReport& b);
std::string verify_text(const VerifyReport& r, bool with_timing = false);
std::string matrix_text(const QMat& m);
std::string matrix_text(const QuatMatrix& m);

}  // namespace lscat
