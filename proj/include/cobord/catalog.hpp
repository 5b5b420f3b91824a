// Variety catalogs: an ordered, label-indexed list of varieties loaded from
// JSON descriptors ({label, ambient, cuts} leaves plus product/union
// combinators), and the builder for the standard catalog shipped with the
// command-line tool.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cobord/partitions.hpp"
#include "cobord/variety.hpp"

namespace cobord {

/// Raised for unreadable catalogs; parse-level failures keep the underlying
/// line/column message.
struct CatalogError : std::runtime_error {
    explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

class Catalog {
  public:
    Catalog() = default;

    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<Variety>& entries() const { return entries_; }

    bool contains(const std::string& label) const { return index_.count(label) > 0; }

    const Variety& at(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end())
            throw CatalogError("no variety labeled '" + label + "' in the catalog");
        return entries_[it->second];
    }

    Catalog& add(Variety v) {
        if (v.label().empty())
            throw CatalogError("catalog entries need a nonempty label");
        if (contains(v.label()))
            throw CatalogError("duplicate catalog label '" + v.label() + "'");
        index_.emplace(v.label(), entries_.size());
        entries_.push_back(std::move(v));
        return *this;
    }

    static Catalog from_json(const nlohmann::ordered_json& doc) {
        if (!doc.is_array())
            throw CatalogError("catalog must be a JSON array of variety descriptors");
        Catalog cat;
        for (size_t i = 0; i < doc.size(); ++i) {
            const auto& node = doc[i];
            std::string where = "entry " + std::to_string(i);
            if (!node.is_object() || !node.contains("label") || !node["label"].is_string())
                throw CatalogError(where + ": descriptor needs a string \"label\"");
            where += " ('" + node["label"].get<std::string>() + "')";
            cat.add(parse_node(node, cat, where).relabeled(node["label"].get<std::string>()));
        }
        return cat;
    }

    static Catalog from_json_text(const std::string& text) {
        nlohmann::ordered_json doc;
        try {
            doc = nlohmann::ordered_json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw CatalogError(e.what());  // keeps nlohmann's line/column report
        }
        return from_json(doc);
    }

    /// Every entry back as a descriptor (leaves and unions of leaves;
    /// products are stored flattened).
    nlohmann::ordered_json to_json() const {
        auto leaf_json = [](const Leaf& leaf) {
            nlohmann::ordered_json j;
            j["ambient"] = leaf.ambient.dims;
            j["cuts"] = leaf.cuts;
            return j;
        };
        auto doc = nlohmann::ordered_json::array();
        for (const auto& v : entries_) {
            nlohmann::ordered_json j;
            j["label"] = v.label();
            if (v.components().size() == 1) {
                j["ambient"] = v.components()[0].ambient.dims;
                j["cuts"] = v.components()[0].cuts;
            } else {
                auto parts = nlohmann::ordered_json::array();
                for (const auto& leaf : v.components())
                    parts.push_back(leaf_json(leaf));
                j["union"] = std::move(parts);
            }
            doc.push_back(std::move(j));
        }
        return doc;
    }

    /// The standard catalog: P^n (n <= 8), hypersurfaces of degree <= 5 and
    /// dimension <= 7, (1,1)-hypersurfaces H_{m,n} (m+n <= 9), products of
    /// projective spaces for every partition of each dimension <= 8, and a
    /// handful of mixed products. 'cubic3' aliases the cubic surface.
    static const Catalog& standard() {
        static const Catalog cat = build_standard();
        return cat;
    }

    /// The standard catalog as shipped on disk, with products written as
    /// combinator nodes referencing earlier labels.
    static nlohmann::ordered_json standard_json() {
        auto doc = nlohmann::ordered_json::array();
        auto leaf = [&](const std::string& label, const std::vector<int>& ambient,
                        const std::vector<std::vector<int>>& cuts) {
            nlohmann::ordered_json j;
            j["label"] = label;
            j["ambient"] = ambient;
            j["cuts"] = cuts;
            doc.push_back(std::move(j));
        };
        auto product = [&](const std::string& label, const std::vector<std::string>& factors) {
            nlohmann::ordered_json j;
            j["label"] = label;
            j["product"] = factors;
            doc.push_back(std::move(j));
        };

        for (int n = 0; n <= 8; ++n)
            leaf("P" + std::to_string(n), {n}, {});
        for (int dim = 1; dim <= 7; ++dim)
            for (int a = 1; a <= 5; ++a)
                leaf("X" + std::to_string(a) + "_P" + std::to_string(dim + 1), {dim + 1},
                     {{a}});
        for (int m = 1; m <= 4; ++m)
            for (int n = m; m + n <= 9; ++n)
                leaf("H" + std::to_string(m) + "_" + std::to_string(n), {m, n}, {{1, 1}});
        leaf("cubic3", {3}, {{3}});

        for (int d = 2; d <= 8; ++d)
            for (const auto& lambda : partitions_of(d)) {
                if (lambda.size() < 2)
                    continue;
                std::vector<std::string> factors;
                std::string label;
                for (int part : lambda) {
                    factors.push_back("P" + std::to_string(part));
                    label += (label.empty() ? "" : "x") + factors.back();
                }
                product(label, factors);
            }

        for (const auto& [a, b] : mixed_products())
            product(a + "x" + b, {a, b});
        return doc;
    }

  private:
    static std::vector<std::pair<std::string, std::string>> mixed_products() {
        return {{"X3_P3", "P1"},  {"H2_3", "P1"},    {"X2_P2", "P2"},
                {"X3_P2", "P3"},  {"H1_1", "H1_2"},  {"X5_P4", "P1"}};
    }

    static Catalog build_standard() { return from_json(standard_json()); }

    static Variety parse_node(const nlohmann::ordered_json& node, const Catalog& defined,
                              const std::string& where) {
        if (node.is_string()) {
            const auto label = node.get<std::string>();
            if (!defined.contains(label))
                throw CatalogError(where + ": reference to undefined label '" + label + "'");
            return defined.at(label);
        }
        if (!node.is_object())
            throw CatalogError(where + ": descriptor must be an object or a label string");

        const bool is_leaf = node.contains("ambient");
        const bool is_product = node.contains("product");
        const bool is_union = node.contains("union");
        if (is_leaf + is_product + is_union != 1)
            throw CatalogError(where +
                               ": need exactly one of \"ambient\", \"product\", \"union\"");

        if (is_leaf) {
            std::vector<int> dims;
            for (const auto& d : node["ambient"]) {
                if (!d.is_number_integer() || d.get<int>() < 0)
                    throw CatalogError(where + ": ambient dimensions must be integers >= 0");
                dims.push_back(d.get<int>());
            }
            std::vector<std::vector<int>> cuts;
            if (node.contains("cuts"))
                for (const auto& cut : node["cuts"]) {
                    std::vector<int> degrees;
                    for (const auto& a : cut) {
                        if (!a.is_number_integer())
                            throw CatalogError(where + ": multidegrees must be integers");
                        degrees.push_back(a.get<int>());
                    }
                    cuts.push_back(std::move(degrees));
                }
            try {
                return Variety::make(label_of(node, where), Ambient(std::move(dims)),
                                     std::move(cuts));
            } catch (const std::invalid_argument& e) {
                throw CatalogError(where + ": " + e.what());
            }
        }

        const auto& children = node[is_product ? "product" : "union"];
        if (!children.is_array() || children.size() < 2)
            throw CatalogError(where + ": combinator needs an array of >= 2 operands");
        Variety acc = parse_node(children[0], defined, where);
        for (size_t i = 1; i < children.size(); ++i) {
            Variety next = parse_node(children[i], defined, where);
            acc = is_product ? Variety::product(acc, next) : Variety::disjoint_union(acc, next);
        }
        if (node.contains("label"))
            acc = acc.relabeled(label_of(node, where));
        return acc;
    }

    static std::string label_of(const nlohmann::ordered_json& node, const std::string& where) {
        if (!node.contains("label"))
            return "anonymous";
        if (!node["label"].is_string())
            throw CatalogError(where + ": \"label\" must be a string");
        return node["label"].get<std::string>();
    }

    std::vector<Variety> entries_;
    std::map<std::string, size_t> index_;
};

}  // namespace cobord
