#include "fermat/report.hpp"

#include <sstream>

namespace fermat {

Json make_envelope(const std::string& command, Json params, Json payload) {
    Json env;
    env["schema_version"] = kSchemaVersion;
    env["command"] = command;
    env["params"] = std::move(params);
    env["payload"] = std::move(payload);
    return env;
}

bool validate_envelope(const Json& env, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (!env.is_object()) return fail("envelope is not an object");
    for (const char* key : {"schema_version", "command", "params", "payload"})
        if (!env.contains(key)) return fail(std::string("missing key: ") + key);
    if (!env["schema_version"].is_string() || env["schema_version"] != kSchemaVersion)
        return fail("unexpected schema_version");
    if (!env["command"].is_string()) return fail("command must be a string");
    if (!env["params"].is_object()) return fail("params must be an object");
    if (!(env["payload"].is_object() || env["payload"].is_array()))
        return fail("payload must be an object or array");
    return true;
}

namespace {

Json class_to_json(const CocycleClass& c) {
    Json j;
    j["label"] = c.label ? c.label->to_string() : "unlabeled";
    j["orbit_size"] = c.orbit_size.get_str();
    const AutElement& rep = c.representative.element;
    j["representative"] = Json::object();
    j["representative"]["vector"] = rep.vec().entries();
    j["representative"]["permutation"] = rep.perm().images();
    return j;
}

}  // namespace

Json to_json(const ClassificationReport& report) {
    Json j;
    j["n"] = report.params.n;
    j["d"] = report.params.d;
    j["cocycle_count"] = report.cocycle_count.get_str();
    j["class_count"] = report.class_count;
    if (report.expected_count)
        j["expected_count"] = report.expected_count->get_str();
    else
        j["expected_count"] = nullptr;
    j["match"] = report.expected_count ? Json(report.matches_expected()) : Json(nullptr);
    j["complete"] = report.complete;
    j["caveats"] = report.caveats;
    j["classes"] = Json::array();
    for (const auto& c : report.classes) j["classes"].push_back(class_to_json(c));
    return j;
}

Json to_json(const RealFormEquation& eq, std::optional<bool> verified) {
    Json j;
    j["label"] = eq.label.to_string();
    j["n"] = eq.n;
    j["d"] = eq.d;
    if (eq.polynomial) {
        j["equation"] = polynomial_text(*eq.polynomial);
        Json terms = Json::array();
        for (const auto& [e, c] : eq.polynomial->terms()) {
            Json term;
            term["coefficient"] = c.get_str();
            term["exponents"] = e;
            terms.push_back(std::move(term));
        }
        j["terms"] = std::move(terms);
    } else {
        j["descriptor"] = *eq.descriptor;
    }
    j["verified"] = verified ? Json(*verified) : Json(nullptr);
    return j;
}

Json to_json(const TopologyDescriptor& descriptor) {
    Json j;
    j["description"] = descriptor.to_string();
    using Kind = TopologyDescriptor::Kind;
    switch (descriptor.kind) {
        case Kind::Empty: j["kind"] = "empty"; break;
        case Kind::Sphere: j["kind"] = "sphere"; j["dim"] = descriptor.dim; break;
        case Kind::ProductOfProjectiveSpaces:
            j["kind"] = "product_of_projective_spaces";
            j["dims"] = {descriptor.dim, descriptor.dim2};
            break;
        case Kind::ProjectiveSpace: j["kind"] = "projective_space"; j["dim"] = descriptor.dim; break;
        case Kind::DisjointSpheres:
            j["kind"] = "disjoint_spheres";
            j["count"] = descriptor.count;
            j["dim"] = descriptor.dim;
            break;
        case Kind::Unknown: j["kind"] = "unknown"; break;
    }
    return j;
}

Json to_json(const RealPointWitness& witness) {
    Json j;
    j["kind"] = witness.exact ? "exact_point" : "sign_change";
    Json coords = Json::array();
    for (const auto& q : witness.point) coords.push_back(q.get_str());
    j["point"] = std::move(coords);
    if (!witness.exact) {
        j["free_variable"] = witness.free_variable;
        j["interval"] = {witness.lo.get_str(), witness.hi.get_str()};
    }
    j["text"] = witness.to_string();
    return j;
}

Json to_json(const ComponentCount& count) {
    Json j;
    j["count"] = count.count;
    j["resolution"] = count.resolution;
    j["stable"] = count.stable;
    j["sphere_components"] = count.sphere_components;
    j["antipodal_class_sizes"] = count.antipodal_class_sizes;
    return j;
}

Json to_json(const std::vector<SweepRow>& rows) {
    Json arr = Json::array();
    for (const auto& row : rows) {
        Json j;
        j["n"] = row.n;
        j["d"] = row.d;
        if (row.report) {
            j["class_count"] = row.report->class_count;
            j["cocycle_count"] = row.report->cocycle_count.get_str();
            j["expected_count"] =
                row.report->expected_count ? Json(row.report->expected_count->get_str()) : Json(nullptr);
            j["complete"] = row.report->complete;
        }
        j["match"] = row.match ? Json(*row.match) : Json(nullptr);
        j["note"] = row.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json to_json(const Signature& sig) {
    Json j;
    j["positive"] = sig.positive;
    j["negative"] = sig.negative;
    j["size"] = sig.size;
    j["nondegenerate"] = sig.nondegenerate();
    return j;
}

Json to_json(const EllNormalization& normalization) {
    Json j;
    j["label"] = to_string(normalization.label);
    j["conjugator"] = normalization.conjugator.to_string();
    j["normal_form"] = normalization.normal_form.to_string();
    return j;
}

std::string render_classification(const ClassificationReport& report) {
    std::ostringstream out;
    out << "real forms of the Fermat hypersurface  n=" << report.params.n
        << "  d=" << report.params.d << "\n";
    out << "cocycles: " << report.cocycle_count.get_str() << "   classes: " << report.class_count
        << "   expected: "
        << (report.expected_count ? report.expected_count->get_str() : std::string("open"))
        << "   match: "
        << (report.expected_count ? (report.matches_expected() ? "yes" : "NO") : "n/a")
        << "   complete: " << (report.complete ? "yes" : "no") << "\n";
    out << "label      orbit size  representative\n";
    for (const auto& c : report.classes) {
        std::string label = c.label ? c.label->to_string() : "unlabeled";
        label.resize(std::max<std::size_t>(label.size(), 9), ' ');
        std::string orbit = c.orbit_size.get_str();
        orbit.resize(std::max<std::size_t>(orbit.size(), 10), ' ');
        out << label << "  " << orbit << "  " << c.representative.element.to_string() << "\n";
    }
    for (const auto& caveat : report.caveats) out << "caveat: " << caveat << "\n";
    return out.str();
}

std::string render_sweep(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "n  d  classes  expected  match  complete\n";
    for (const auto& row : rows) {
        out << row.n << "  " << row.d << "  ";
        if (row.report) {
            out << row.report->class_count << "        "
                << (row.report->expected_count ? row.report->expected_count->get_str() : "open")
                << "       " << (row.match ? (*row.match ? "yes" : "NO") : "n/a") << "    "
                << (row.report->complete ? "yes" : "no");
        } else {
            out << "error: " << row.note;
        }
        if (row.report && !row.note.empty()) out << "  (" << row.note << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace fermat
