#pragma once

#include "monicrep/repmod.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace monicrep::io {

using json = nlohmann::json;
using algebra::AlgebraPtr;
using exactlin::Field;
using exactlin::Matrix;
using exactlin::Scalar;
using quiver::Quiver;
using repmod::Representation;

json field_to_json(const Field& f);
Field field_from_json(const json& j);

// Row-major nested arrays; residues as integers, rationals as "a/b" strings.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const Field& f);

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

// Arrow-name list, or {"vertex": label} for trivial paths.
json path_to_json(const quiver::Path& p, const Quiver& q);
quiver::Path path_from_json(const json& j, const Quiver& q);

json representation_to_json(const Representation& x);

// Named quivers, algebras, bimodules and representations from one bundle file;
// every cross-reference resolves at load time.
class Workspace {
public:
    static Workspace load(const json& bundle);

    const Quiver& quiver(const std::string& name) const;
    const AlgebraPtr& algebra(const std::string& name) const;
    const repmod::Bimodule& bimodule(const std::string& name) const;
    const Representation& representation(const std::string& name) const;

    // the explicit "target" entry, or the unique representation, or error
    std::string default_target() const;
    std::string default_algebra_target() const;
    std::string default_quiver_target() const;

    const std::map<std::string, json>& raw_entries() const { return raw_; }

private:
    std::map<std::string, Quiver> quivers_;
    std::map<std::string, AlgebraPtr> algebras_;
    std::map<std::string, repmod::Bimodule> bimodules_;
    std::map<std::string, Representation> representations_;
    std::optional<std::string> target_;
    std::map<std::string, json> raw_; // per-section originals, for hashing
};

// FNV-1a over the canonical dump; stable content fingerprint for reports.
std::string content_hash(const json& j);

} // namespace monicrep::io
