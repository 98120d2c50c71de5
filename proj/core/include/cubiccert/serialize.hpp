#pragma once

#include <json.hpp>

#include "cubiccert/cubic_surface.hpp"
#include "cubiccert/fourfold.hpp"
#include "cubiccert/skmap.hpp"
#include "cubiccert/smoothness.hpp"
#include "cubiccert/typecalc.hpp"

namespace cubiccert {

/// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const TypeSignature& t);
Json to_json(const Statement& s);
/// {conclusion: {kind, degree?, type}, rule, citation, premises}
Json to_json(const Certificate& c);
Json to_json(const SmoothnessVerdict& v);
Json to_json(const BlockDecomposition& d);
Json to_json(const FormCertification& c);
Json to_json(const SKIdentityReport& r);
/// {prime, samples, histogram: {"size": count}, mean: "num/den"}
Json to_json(const FiberReport& r);
/// {direction, offset}
Json to_json(const LineOnSurface& l);
Json to_json(const std::vector<LineOnSurface>& lines);
Json to_json(const EckardtGroup& g);
Json to_json(const std::vector<EckardtGroup>& groups);
Json to_json(const LineMeeting& m);
Json to_json(const PlaneInP5& plane);
Json to_json(const DisjointWitness& w);
Json to_json(const WitnessScan& s);
Json to_json(const LinearSpacesReport& r);

/// Throws MalformedCertificate naming the offending path.
Certificate certificate_from_json(const Json& j);
Statement statement_from_json(const Json& j, const std::string& path = "$");

}  // namespace cubiccert
