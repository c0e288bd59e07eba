#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hopf/green.hpp"

namespace hopf::io {

using nlohmann::json;

inline constexpr const char* tool_version = "0.1.0";

/// FNV-1a 64-bit digest of a byte string, hex-encoded. Used for fixture
/// manifests and certificate input digests.
std::string digest(const std::string& bytes);

// Ring documents: {name, basis, unit, dual, dims, products:[{left,right,terms}]}
FusionRing ring_from_json(const json& doc);
json ring_to_json(const FusionRing& ring);

// Group documents: {name, order, table} (row-major, identity = 0)
FiniteGroup group_from_json(const json& doc);
json group_to_json(const FiniteGroup& group);

// Green datum documents: group + subgroup lattice + per-subgroup rings and
// induction/restriction/conjugation matrices.
RepData repdata_from_json(const json& doc);

/// Canonical text form: sorted keys, two-space indent, no floats anywhere.
std::string canonical_dump(const json& doc);

FusionRing load_ring_file(const std::filesystem::path& path);
FiniteGroup load_group_file(const std::filesystem::path& path);
json load_json_file(const std::filesystem::path& path);

/// Fixture lookup: resolves `name` in the data directory (HOPFRING_DATA_DIR
/// environment variable, falling back to the compiled-in default). Ring and
/// group fixtures are both reachable; throws UnknownFixture.
std::filesystem::path data_directory();
FusionRing load_fixture_ring(const std::string& name);
FiniteGroup load_fixture_group(const std::string& name);

/// Writes every builtin fixture plus a manifest of content digests into dir.
void write_fixtures(const std::filesystem::path& dir);

/// One check line of a certificate.
struct CertificateCheck {
    std::string name;
    bool passed;
    std::string witness;
};

struct Certificate {
    std::string command;
    std::string inputs_digest;
    std::vector<CertificateCheck> checks; // serialized sorted by name
    std::string summary;
    std::optional<std::uint64_t> seed;

    json to_json() const;
    bool all_passed() const;
};

} // namespace hopf::io
