#include <gtest/gtest.h>

#include "support.hpp"

namespace swkg {
namespace {

using test::corpus;
using test::rdf_type;
using test::sw;
using test::ttl;

std::size_t schema_triples(const Graph& g) {
  std::size_t n = 0;
  for (const auto& t : g.triples()) {
    if (t.predicate == rdf_type() &&
        (t.object == Term::iri(vocab::owl("Class")) ||
         t.object == Term::iri(vocab::owl("ObjectProperty")) ||
         t.object == Term::iri(vocab::owl("DatatypeProperty")))) {
      ++n;
    }
  }
  return n;
}

TEST(Turtle, ExampleListingCounts) {
  const auto& g = corpus().section35;
  EXPECT_EQ(g.size(), 72u);
  EXPECT_EQ(schema_triples(g), 13u);
  EXPECT_EQ(g.size() - schema_triples(g), 59u);
}

TEST(Turtle, ExampleListingRoundTrip) {
  const auto& g = corpus().section35;
  const auto text = turtle::serialize(g);
  const auto again = turtle::parse(text);
  EXPECT_EQ(again.size(), 72u);
  EXPECT_TRUE(isomorphic(g, again));
  EXPECT_EQ(turtle::serialize(again), text);
}

TEST(Turtle, PredicateObjectLists) {
  const auto g = ttl(":s a :A , :B ; :p :o .");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.contains({sw("s"), rdf_type(), sw("B")}));
  EXPECT_TRUE(g.contains({sw("s"), sw("p"), sw("o")}));
}

TEST(Turtle, PrefixAndBaseDirectives) {
  const auto g = turtle::parse(
      "@base <http://x.org/> .\n"
      "@prefix e: <http://e.org/> .\n"
      "PREFIX f: <http://f.org/>\n"
      "<s> e:p f:o .\n");
  EXPECT_TRUE(g.contains({Term::iri("http://x.org/s"), Term::iri("http://e.org/p"),
                          Term::iri("http://f.org/o")}));
}

TEST(Turtle, StringsAndEscapes) {
  const auto g = ttl(
      ":s :p \"a \\\"quoted\\\" word\\n\" .\n"
      ":s :q \"\"\"line one\nline two\"\"\" .\n"
      ":s :r \"7\"^^xsd:integer .\n");
  EXPECT_TRUE(g.contains({sw("s"), sw("p"), Term::literal("a \"quoted\" word\n")}));
  EXPECT_TRUE(g.contains({sw("s"), sw("q"), Term::literal("line one\nline two")}));
  EXPECT_TRUE(g.contains({sw("s"), sw("r"), Term::literal("7", vocab::xsd("integer"))}));
  EXPECT_TRUE(isomorphic(g, turtle::parse(turtle::serialize(g))));
}

TEST(Turtle, BlankNodeLabelsAreScopedToTheDocument) {
  const auto g = ttl("_:x :p _:y . _:x :q :o .");
  EXPECT_EQ(g.nulls().size(), 2u);
  Graph merged;
  turtle::ParseOptions opts;
  opts.prefixes = default_prefixes();
  turtle::parse_into(merged, "_:x :p :o .", opts);
  turtle::parse_into(merged, "_:x :p :o .", opts);
  EXPECT_EQ(merged.size(), 2u);
}

TEST(Turtle, EmptyDocument) {
  EXPECT_TRUE(turtle::parse("").empty());
  EXPECT_TRUE(turtle::parse("# only a comment\n").empty());
  EXPECT_EQ(turtle::serialize(Graph{}), "");
}

TEST(Turtle, MissingFinalDotReportsPosition) {
  try {
    ttl(":a :p :b .\n:c :p :d\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Turtle, UndeclaredPrefixIsAnError) {
  EXPECT_THROW(turtle::parse("nope:a nope:p nope:b ."), ParseError);
}

TEST(Turtle, UnsupportedConstructsAreRejected) {
  EXPECT_THROW(ttl(":a :p [ :q :r ] ."), ParseError);
  EXPECT_THROW(ttl(":a :p ( :b :c ) ."), ParseError);
  EXPECT_THROW(ttl(":a :p \"x\"@en ."), ParseError);
  EXPECT_THROW(ttl(":a :p 42 ."), ParseError);
}

TEST(Turtle, LiteralSubjectIsAnError) {
  EXPECT_THROW(ttl("\"x\" :p :o ."), ParseError);
}

TEST(Turtle, SerializationUsesPrefixesAndGrouping) {
  const auto g = ttl(":s a :A ; :p :o1 , :o2 .");
  const auto text = turtle::serialize(g);
  EXPECT_NE(text.find("@prefix : <https://example.org/spaceweather#> ."),
            std::string::npos);
  EXPECT_NE(text.find(":s a :A ;"), std::string::npos);
  EXPECT_NE(text.find(":o1 , :o2"), std::string::npos);
}

TEST(Turtle, SerializationIsDeterministic) {
  const auto a = ttl(":b :p :c . :a :p :c . :a a :X .");
  const auto b = ttl(":a a :X . :a :p :c . :b :p :c .");
  EXPECT_EQ(turtle::serialize(a), turtle::serialize(b));
}

}  // namespace
}  // namespace swkg
