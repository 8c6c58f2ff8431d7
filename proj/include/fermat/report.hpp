// Deterministic report envelopes (ordered JSON) and human-readable tables
// for the CLI surface.
#ifndef FERMAT_REPORT_HPP
#define FERMAT_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "fermat/cohomology.hpp"
#include "fermat/elliptic.hpp"
#include "fermat/equations.hpp"
#include "fermat/loci.hpp"
#include "fermat/quadric.hpp"

namespace fermat {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json make_envelope(const std::string& command, Json params, Json payload);
// Minimal structural validation of an envelope produced by this library.
bool validate_envelope(const Json& envelope, std::string* error = nullptr);

Json to_json(const ClassificationReport& report);
Json to_json(const RealFormEquation& eq, std::optional<bool> verified);
Json to_json(const TopologyDescriptor& descriptor);
Json to_json(const RealPointWitness& witness);
Json to_json(const ComponentCount& count);
Json to_json(const std::vector<SweepRow>& rows);
Json to_json(const Signature& sig);
Json to_json(const EllNormalization& normalization);

std::string render_classification(const ClassificationReport& report);
std::string render_sweep(const std::vector<SweepRow>& rows);

}  // namespace fermat

#endif
