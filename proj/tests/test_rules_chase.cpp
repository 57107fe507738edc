#include <gtest/gtest.h>

#include "support.hpp"
#include "swkg/chase.hpp"

namespace swkg {
namespace {

using test::corpus;
using test::rdf_type;
using test::sw;
using test::ttl;

std::vector<ExistentialRule> rules(const std::string& text) {
  return parse_rules(text, default_prefixes());
}

TEST(Rules, CorpusVariantsHaveExpectedShape) {
  const auto& c = corpus();
  ASSERT_EQ(c.rules_resolved.size(), 1u);
  ASSERT_EQ(c.rules_printed.size(), 1u);
  ASSERT_EQ(c.rules_enriched.size(), 1u);
  EXPECT_EQ(c.rules_resolved[0].body.size(), 2u);
  EXPECT_EQ(c.rules_resolved[0].head.size(), 16u);
  EXPECT_EQ(c.rules_resolved[0].existentials.size(), 11u);
  EXPECT_EQ(c.rules_printed[0].body.size(), 1u);
  EXPECT_EQ(c.rules_printed[0].head.size(), 16u);
  EXPECT_EQ(c.rules_enriched[0].head.size(), 27u);
  EXPECT_EQ(c.rules_resolved[0].frontier(), std::vector<std::string>{"solarevent"});
}

TEST(Rules, ParsesConstantsVariablesAndTypeAtoms) {
  const auto r = rules(
      "r1: p(x, :c), q(?y, \"lit\") -> exists z . type(z, A), s(x, z) .");
  ASSERT_EQ(r.size(), 1u);
  const auto& body0 = std::get<PropertyAtom>(r[0].body[0]);
  EXPECT_EQ(body0.property, vocab::sw("p"));
  EXPECT_EQ(std::get<Variable>(body0.subject).name, "x");
  EXPECT_EQ(std::get<Term>(body0.object), sw("c"));
  const auto& body1 = std::get<PropertyAtom>(r[0].body[1]);
  EXPECT_EQ(std::get<Variable>(body1.subject).name, "y");
  EXPECT_EQ(std::get<Term>(body1.object), Term::literal("lit"));
  const auto& head0 = std::get<TypeAtom>(r[0].head[0]);
  EXPECT_EQ(head0.class_iri, vocab::sw("A"));
  EXPECT_EQ(r[0].existentials, std::vector<std::string>{"z"});
}

TEST(Rules, FormatRoundTrips) {
  for (const auto* set : {&corpus().rules_resolved, &corpus().rules_printed,
                          &corpus().rules_enriched}) {
    const auto& r = set->front();
    const auto again = parse_rules(format_rule(r));
    ASSERT_EQ(again.size(), 1u);
    EXPECT_EQ(again[0].body, r.body);
    EXPECT_EQ(again[0].head, r.head);
    EXPECT_EQ(again[0].existentials, r.existentials);
  }
}

TEST(Rules, StructuralErrors) {
  EXPECT_THROW(rules("r: -> q(x, x) ."), ParseError);
  EXPECT_THROW(rules("r: p(x, y) -> exists y . q(x, y) ."), ParseError);
  EXPECT_THROW(rules("r: p(x, y) -> q(x, w) ."), ParseError);
  EXPECT_THROW(rules("r: p(x, y) -> exists z, z . q(x, z) ."), ParseError);
  EXPECT_THROW(rules("r: p(x, y) -> q(x, y) .\nr: p(x, y) -> q(y, x) ."),
               ParseError);
}

TEST(Rules, CheckRuleDirectly) {
  ExistentialRule r;
  r.id = "r";
  r.head = {PropertyAtom{vocab::sw("p"), Variable{"x"}, Variable{"x"}}};
  EXPECT_THROW(check_rule(r), StructuralError);
}

TEST(Chase, TriggerReproducesResponseChain) {
  Graph g = corpus().trigger;
  const auto before = g.size();
  const auto r = chase(g, corpus().rules_resolved);
  EXPECT_EQ(r.added.size(), 16u);
  EXPECT_EQ(r.nulls_created, 11u);
  EXPECT_EQ(r.firings, 1u);
  EXPECT_TRUE(r.terminated);
  EXPECT_EQ(g.size(), before + 16);

  const auto again = chase(g, corpus().rules_resolved);
  EXPECT_EQ(again.added.size(), 0u);
  EXPECT_EQ(again.firings, 0u);
  EXPECT_TRUE(again.terminated);

  const auto chain = response_chain(g, sw("solarEvent"));
  ASSERT_EQ(chain.size(), 5u);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    EXPECT_TRUE(chain[i].is_null());
    const Term rt = sw("responseType" + std::to_string(i + 1));
    EXPECT_TRUE(g.contains({chain[i], sw("hasResponseType"), rt}));
  }
}

TEST(Chase, PrintedVariantOnStringTrigger) {
  Graph g = corpus().trigger_literal;
  const auto r = chase(g, corpus().rules_printed);
  EXPECT_EQ(r.added.size(), 16u);
  EXPECT_EQ(r.nulls_created, 11u);
  EXPECT_TRUE(r.terminated);
  EXPECT_EQ(response_chain(g, sw("solarEvent")).size(), 5u);
}

TEST(Chase, PrintedVariantDoesNotMatchIndividualTrigger) {
  Graph g = corpus().trigger;
  const auto r = chase(g, corpus().rules_printed);
  EXPECT_EQ(r.firings, 0u);
  EXPECT_TRUE(response_chain(g, sw("solarEvent")).empty());
}

TEST(Chase, SatisfiedExampleGraphIsUnchanged) {
  Graph g = corpus().section35;
  const auto r = chase(g, corpus().rules_resolved);
  EXPECT_EQ(r.firings, 0u);
  EXPECT_EQ(r.added.size(), 0u);
  EXPECT_TRUE(r.terminated);
  EXPECT_EQ(r.rounds, 1u);
  EXPECT_EQ(g.size(), 72u);
}

TEST(Chase, EnrichedVariantTypesInventedIndividuals) {
  Graph g = corpus().trigger;
  const auto r = chase(g, corpus().rules_enriched);
  EXPECT_EQ(r.added.size(), 27u);
  EXPECT_EQ(r.nulls_created, 11u);
  const auto chain = response_chain(g, sw("solarEvent"));
  ASSERT_EQ(chain.size(), 5u);
  for (const auto& n : chain) {
    EXPECT_TRUE(g.contains({n, rdf_type(), sw("Response")}));
  }
}

TEST(Chase, DeterministicAcrossRuns) {
  Graph a = corpus().trigger;
  Graph b = corpus().trigger;
  chase(a, corpus().rules_enriched);
  chase(b, corpus().rules_enriched);
  EXPECT_EQ(turtle::serialize(a), turtle::serialize(b));
}

TEST(Chase, ZeroRoundsIsRejected) {
  Graph g;
  EXPECT_THROW(chase(g, corpus().rules_resolved, 0), std::invalid_argument);
}

TEST(Chase, NonTerminatingRuleHitsBudget) {
  Graph g = ttl(":a a :A .");
  const auto r = chase(
      g, rules("grow: type(x, A) -> exists y . next(x, y), type(y, A) ."), 5);
  EXPECT_FALSE(r.terminated);
  EXPECT_EQ(r.rounds, 5u);
  EXPECT_EQ(r.nulls_created, 5u);
}

TEST(Chase, BudgetReachedOnConfirmingRoundIsNotTermination) {
  Graph g = corpus().trigger;
  const auto r = chase(g, corpus().rules_resolved, 1);
  EXPECT_EQ(r.added.size(), 16u);
  EXPECT_FALSE(r.terminated);
}

TEST(Chase, RestrictedTriggerSkipsSatisfiedHeads) {
  Graph g = ttl(":a a :A . :a :p _:w . _:w a :B .");
  const auto r =
      chase(g, rules("r: type(x, A) -> exists y . p(x, y), type(y, B) ."));
  EXPECT_EQ(r.firings, 0u);
  EXPECT_TRUE(r.terminated);
}

TEST(Chase, DatalogRulesAddNoNulls) {
  Graph g = ttl(":a :p :b . :b :p :c .");
  const auto r = chase(g, rules("t: p(x, y), p(y, z) -> p(x, z) ."));
  EXPECT_EQ(r.nulls_created, 0u);
  EXPECT_TRUE(g.contains({sw("a"), sw("p"), sw("c")}));
}

TEST(Saturate, ComputesFixpoint) {
  Graph g = ttl(":a :p :b . :b :p :c . :c :p :d .");
  const auto r = saturate(g, rules("t: p(x, y), p(y, z) -> p(x, z) ."));
  EXPECT_EQ(r.added.size(), 3u);
  EXPECT_TRUE(r.terminated);
  EXPECT_TRUE(g.contains({sw("a"), sw("p"), sw("d")}));
}

TEST(Saturate, RejectsExistentialRules) {
  Graph g;
  EXPECT_THROW(saturate(g, corpus().rules_resolved), std::invalid_argument);
}

TEST(ResponseChain, ExampleGraph) {
  const auto chain = response_chain(corpus().section35, sw("solarEvent"));
  ASSERT_EQ(chain.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(chain[i], sw("response" + std::to_string(i + 1)));
  }
}

TEST(ResponseChain, Errors) {
  EXPECT_THROW(response_chain(corpus().section35, sw("nothing")), ChainError);
  const auto branch = ttl(
      ":e :requiresResponse :s . :s :hasFirstResponse :r1 ."
      ":r1 :hasNextResponse :r2 , :r3 .");
  EXPECT_THROW(response_chain(branch, sw("e")), ChainError);
  const auto cycle = ttl(
      ":e :requiresResponse :s . :s :hasFirstResponse :r1 ."
      ":r1 :hasNextResponse :r2 . :r2 :hasNextResponse :r1 .");
  EXPECT_THROW(response_chain(cycle, sw("e")), ChainError);
  const auto lone = ttl(":e a :SolarEvent .");
  EXPECT_TRUE(response_chain(lone, sw("e")).empty());
}

}  // namespace
}  // namespace swkg
