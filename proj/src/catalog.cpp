#include "jordanlab/catalog.hpp"

#include <cstdio>
#include <fstream>
#include <functional>

#include <nlohmann/json.hpp>

namespace jordanlab {

namespace {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::vector<int>> parse_table(const nlohmann::json& t) {
    std::vector<std::vector<int>> table;
    for (const auto& row : t) {
        table.push_back(row.get<std::vector<int>>());
    }
    return table;
}

}  // namespace

void Catalog::add(const std::string& label, RingPtr ring) {
    rings_[label] = std::move(ring);
    source_.clear();
}

const RingPtr& Catalog::get(const std::string& label) const {
    auto it = rings_.find(label);
    if (it == rings_.end()) throw UnknownLabel(label);
    return it->second;
}

std::vector<std::string> Catalog::labels() const {
    std::vector<std::string> out;
    for (const auto& [label, ring] : rings_) out.push_back(label);
    return out;
}

std::string Catalog::hash() const {
    if (!source_.empty()) return fnv1a_hex(source_);
    std::string key;
    for (const auto& [label, ring] : rings_) {
        key += label;
        key += ':';
        key += std::to_string(ring->size());
        key += ';';
    }
    return fnv1a_hex(key);
}

Catalog Catalog::from_json(const nlohmann::json& doc, int carrier_cap) {
    if (!doc.is_object()) throw CatalogError("document must be an object");

    Catalog catalog;
    enum class State { Unvisited, Visiting, Done };
    std::map<std::string, State> state;
    for (auto it = doc.begin(); it != doc.end(); ++it) state[it.key()] = State::Unvisited;

    std::function<void(const std::string&)> build = [&](const std::string& label) {
        auto st = state.find(label);
        if (st == state.end()) throw CatalogError("reference to undefined label " + label);
        if (st->second == State::Done) return;
        if (st->second == State::Visiting) {
            throw CatalogError("cyclic reference through label " + label);
        }
        st->second = State::Visiting;

        const nlohmann::json& desc = doc.at(label);
        const std::string kind = desc.value("kind", "");
        RingPtr ring;
        if (kind == "cyclic") {
            ring = cyclic_ring(desc.at("modulus").get<int>(), label);
        } else if (kind == "product") {
            auto factors = desc.at("factors").get<std::vector<std::string>>();
            if (factors.size() < 2) {
                throw CatalogError("product needs at least two factors: " + label);
            }
            for (const auto& f : factors) build(f);
            RingPtr acc = catalog.get(factors[0]);
            for (std::size_t i = 1; i < factors.size(); ++i) {
                acc = direct_product(acc, catalog.get(factors[i]),
                                     i + 1 == factors.size() ? label : "");
            }
            ring = acc;
        } else if (kind == "matrix") {
            ring = matrix_ring(desc.at("modulus").get<int>(), desc.at("dim").get<int>(),
                               carrier_cap, label);
        } else if (kind == "tables") {
            auto add = parse_table(desc.at("add"));
            auto mul = parse_table(desc.at("mul"));
            std::optional<int> unit;
            if (desc.contains("unit")) unit = desc.at("unit").get<int>();
            ring = ring_from_tables(static_cast<int>(add.size()), add, mul, unit, label);
        } else {
            throw CatalogError("unknown kind '" + kind + "' for label " + label);
        }
        if (ring->size() > carrier_cap) {
            throw CarrierTooLarge(ring->size(), carrier_cap);
        }
        catalog.rings_.emplace(label, std::move(ring));
        st->second = State::Done;
    };

    for (auto it = doc.begin(); it != doc.end(); ++it) build(it.key());
    catalog.source_ = doc.dump();
    return catalog;
}

Catalog Catalog::from_file(const std::filesystem::path& path, int carrier_cap) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw CatalogError(std::string("parse failure: ") + e.what());
    }
    return from_json(doc, carrier_cap);
}

}  // namespace jordanlab
