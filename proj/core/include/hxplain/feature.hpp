#pragma once

#include "hxplain/errors.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace hxplain {

/// Grid coordinate, used as a feature value by the grid environments.
struct Cell {
    int x = 0;
    int y = 0;
    auto operator<=>(const Cell&) const = default;
};

/// A feature value: integer, grid cell, or categorical token.
using Value = std::variant<std::int64_t, Cell, std::string>;

using Domain = std::vector<Value>;

/// Ordered feature list with finite domains; defines the feature space
/// D_1 x ... x D_n that states, predicates and PAXp's all refer to.
class FeatureSchema {
public:
    struct Feature {
        std::string name;
        Domain domain;
    };

    explicit FeatureSchema(std::vector<Feature> features)
        : features_(std::move(features)) {
        for (std::size_t i = 0; i < features_.size(); ++i) {
            if (features_[i].domain.empty())
                throw Error("FeatureSchema: empty domain for " + features_[i].name);
            for (std::size_t j = i + 1; j < features_.size(); ++j)
                if (features_[i].name == features_[j].name)
                    throw Error("FeatureSchema: duplicate feature " + features_[i].name);
        }
    }

    std::size_t arity() const { return features_.size(); }
    const Feature& feature(std::size_t i) const { return features_.at(i); }
    const std::vector<Feature>& features() const { return features_; }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < features_.size(); ++i)
            if (features_[i].name == name) return i;
        throw Error("FeatureSchema: unknown feature " + name);
    }

    bool in_domain(std::size_t i, const Value& v) const {
        for (const Value& d : features_.at(i).domain)
            if (d == v) return true;
        return false;
    }

private:
    std::vector<Feature> features_;
};

using SchemaPtr = std::shared_ptr<const FeatureSchema>;

/// A point in feature space, positionally aligned with its schema.
/// Equality and ordering are value-wise, so states can key ordered maps.
class State {
public:
    State() = default;
    State(SchemaPtr schema, std::vector<Value> values)
        : schema_(std::move(schema)), values_(std::move(values)) {
        if (values_.size() != schema_->arity())
            throw SchemaMismatch("State: arity mismatch");
    }

    const SchemaPtr& schema() const { return schema_; }
    const std::vector<Value>& values() const { return values_; }
    const Value& value(std::size_t i) const { return values_.at(i); }

    State with_value(std::size_t i, Value v) const {
        std::vector<Value> vals = values_;
        vals.at(i) = std::move(v);
        return State(schema_, std::move(vals));
    }

    std::int64_t as_int(std::size_t i) const {
        return std::get<std::int64_t>(values_.at(i));
    }
    Cell as_cell(std::size_t i) const { return std::get<Cell>(values_.at(i)); }

    bool operator==(const State& o) const { return values_ == o.values_; }
    bool operator<(const State& o) const { return values_ < o.values_; }

private:
    SchemaPtr schema_;
    std::vector<Value> values_;
};

} // namespace hxplain
