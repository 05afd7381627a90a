#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "jordanlab/ring.hpp"

#include <nlohmann/json_fwd.hpp>

namespace jordanlab {

/// Named collection of rings built from JSON constructor descriptors.
/// Labels may forward-reference each other; cycles are an error.
class Catalog {
public:
    Catalog() = default;

    static Catalog from_json(const nlohmann::json& doc, int carrier_cap = kDefaultCarrierCap);
    static Catalog from_file(const std::filesystem::path& path,
                             int carrier_cap = kDefaultCarrierCap);

    void add(const std::string& label, RingPtr ring);

    const RingPtr& get(const std::string& label) const;  // throws UnknownLabel
    bool contains(const std::string& label) const { return rings_.count(label) > 0; }
    std::vector<std::string> labels() const;

    /// FNV-1a over the canonical source document, hex encoded.
    /// Programmatically built catalogs hash their label list instead.
    std::string hash() const;

private:
    std::map<std::string, RingPtr> rings_;
    std::string source_;
};

}  // namespace jordanlab
