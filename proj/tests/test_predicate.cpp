#include "hxplain/predicate.hpp"

#include <doctest.h>

using namespace hxplain;

namespace {

SchemaPtr two_feature_schema() {
    return std::make_shared<FeatureSchema>(std::vector<FeatureSchema::Feature>{
        {"x", {Value(std::int64_t(0)), Value(std::int64_t(1))}},
        {"y", {Value(std::int64_t(0)), Value(std::int64_t(1)),
               Value(std::int64_t(2))}}});
}

} // namespace

TEST_CASE("terms are conjunctions of equality literals") {
    auto schema = two_feature_schema();
    State s(schema, {Value(std::int64_t(1)), Value(std::int64_t(2))});
    CHECK(Term({{0, Value(std::int64_t(1))}}).eval(s));
    CHECK_FALSE(Term({{0, Value(std::int64_t(0))}}).eval(s));
    CHECK(Term({{0, Value(std::int64_t(1))}, {1, Value(std::int64_t(2))}}).eval(s));
    CHECK_FALSE(
        Term({{0, Value(std::int64_t(1))}, {1, Value(std::int64_t(0))}}).eval(s));
    CHECK(Term().eval(s)); // empty conjunction is True
}

TEST_CASE("duplicate features in a term are rejected") {
    CHECK_THROWS(Term({{0, Value(std::int64_t(0))}, {0, Value(std::int64_t(1))}}));
}

TEST_CASE("from_assignment fixes exactly the requested features") {
    auto schema = two_feature_schema();
    State s(schema, {Value(std::int64_t(0)), Value(std::int64_t(2))});
    Term t = Term::from_assignment({1}, s);
    CHECK(t.literals().size() == 1);
    CHECK(t.eval(s));
    CHECK(t.eval(s.with_value(0, Value(std::int64_t(1)))));
    CHECK_FALSE(t.eval(s.with_value(1, Value(std::int64_t(0)))));
}

TEST_CASE("dnf is a disjunction of terms") {
    auto schema = two_feature_schema();
    State a(schema, {Value(std::int64_t(0)), Value(std::int64_t(0))});
    State b(schema, {Value(std::int64_t(1)), Value(std::int64_t(1))});
    State c(schema, {Value(std::int64_t(1)), Value(std::int64_t(2))});
    Predicate d = Predicate::dnf({Term({{0, Value(std::int64_t(0))}}),
                                  Term({{1, Value(std::int64_t(1))}})});
    CHECK(d.eval(a));
    CHECK(d.eval(b));
    CHECK_FALSE(d.eval(c));
}

TEST_CASE("constants") {
    auto schema = two_feature_schema();
    State s(schema, {Value(std::int64_t(0)), Value(std::int64_t(0))});
    CHECK(Predicate::constant(true).eval(s));
    CHECK_FALSE(Predicate::constant(false).eval(s));
}

TEST_CASE("native predicates delegate to the captured function") {
    auto schema = two_feature_schema();
    State s(schema, {Value(std::int64_t(1)), Value(std::int64_t(0))});
    Predicate p = Predicate::native(
        {"test", "x-is-one",
         [](const State& st) { return st.as_int(0) == 1; }});
    CHECK(p.eval(s));
    CHECK_FALSE(p.eval(s.with_value(0, Value(std::int64_t(0)))));
    CHECK_FALSE(p.is_dnf());
    CHECK(p.native().name == "x-is-one");
}

TEST_CASE("schema rejects duplicate names and out-of-domain values") {
    CHECK_THROWS(FeatureSchema(std::vector<FeatureSchema::Feature>{
        {"x", {Value(std::int64_t(0))}}, {"x", {Value(std::int64_t(0))}}}));
    auto schema = two_feature_schema();
    CHECK(schema->in_domain(1, Value(std::int64_t(2))));
    CHECK_FALSE(schema->in_domain(0, Value(std::int64_t(2))));
}
