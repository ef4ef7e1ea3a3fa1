#include "sosq/document.hpp"

#include "support/corpus.hpp"

#include <gtest/gtest.h>

using namespace sosq;

namespace {

SystemDocument sample() {
  Provenance leaf{"classical", {{"dim", 8}}, {}};
  Provenance top{"combine", {}, {leaf, leaf}};
  return SystemDocument{std::string(kSchemaVersion), classical(2), top};
}

std::string expect_schema_error(const std::string &text) {
  try {
    parse_document(text);
  } catch (const SchemaError &e) {
    return e.what();
  }
  ADD_FAILURE() << "no SchemaError for: " << text;
  return {};
}

} // namespace

TEST(Document, GoldenLayout) {
  const SystemDocument doc{std::string(kSchemaVersion), classical(2),
                           Provenance{"classical", {{"dim", 2}}, {}}};
  EXPECT_EQ(serialize(doc), R"({
  "schema_version": "sosq.system/1",
  "size": [2, 2, 2],
  "matrices": [
    [
      [1, 0],
      [0, 1]
    ],
    [
      [0, -1],
      [1, 0]
    ]
  ],
  "provenance": {"operation":"classical","args":{"dim":2},"inputs":[]}
}
)");
}

TEST(Document, ProvenanceIsOptional) {
  const SystemDocument doc{std::string(kSchemaVersion), classical(1),
                           std::nullopt};
  const std::string text = serialize(doc);
  EXPECT_EQ(text.find("provenance"), std::string::npos);
  EXPECT_EQ(parse_document(text), doc);
}

TEST(Document, RoundTripsCorpus) {
  for (const auto &b : sosq::testing::construction_corpus(32)) {
    SystemDocument doc = sample();
    doc.system = b.sys;
    const std::string text = serialize(doc);
    const SystemDocument back = parse_document(text);
    EXPECT_EQ(back, doc) << b.name;
    EXPECT_EQ(serialize(back), text) << b.name;
  }
}

TEST(Document, AcceptsCompactEquivalent) {
  const SystemDocument doc = parse_document(
      R"({"size":[1,1,2],"schema_version":"sosq.system/1","matrices":[[[0],[1]]]})");
  EXPECT_EQ(doc.system.size(), (FormulaSize{1, 1, 2}));
  EXPECT_EQ(doc.system[0], (IntMatrix{{0}, {1}}));
  EXPECT_FALSE(doc.provenance);
}

TEST(Document, SyntaxErrorCarriesLine) {
  const std::string msg = expect_schema_error("{\n  \"size\": [1, 1, 1],\n  oops\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(Document, SchemaViolations) {
  const std::string v = R"("schema_version": "sosq.system/1")";
  EXPECT_NE(expect_schema_error("[1, 2]").find("JSON object"),
            std::string::npos);
  EXPECT_NE(expect_schema_error(R"({"size":[1,1,1],"matrices":[[[1]]]})")
                .find("schema_version"),
            std::string::npos);
  EXPECT_NE(expect_schema_error(
                R"({"schema_version":"sosq.system/9","size":[1,1,1],"matrices":[[[1]]]})")
                .find("unsupported schema version"),
            std::string::npos);
  EXPECT_NE(expect_schema_error("{" + v + R"(,"size":[2,1,1],"matrices":[[[1]]]})")
                .find("/matrices"),
            std::string::npos);
  EXPECT_NE(expect_schema_error("{" + v + R"(,"size":[1,2,1],"matrices":[[[1]]]})")
                .find("/matrices/0/0"),
            std::string::npos);
  EXPECT_NE(expect_schema_error("{" + v + R"(,"size":[1,1,1],"matrices":[[[1.5]]]})")
                .find("/matrices/0/0/0"),
            std::string::npos);
  EXPECT_NE(expect_schema_error("{" + v + R"(,"size":[1,1,1],"matrices":[[[99999999999999999999]]]})")
                .find("out of 64-bit range"),
            std::string::npos);
  EXPECT_NE(expect_schema_error("{" + v + R"(,"size":[0,1,1],"matrices":[]})")
                .find("/size/0"),
            std::string::npos);
  EXPECT_NE(expect_schema_error("{" + v + R"(,"size":[1,1,1],"matrices":[[[1]]],"extra":1})")
                .find("unknown field \"extra\""),
            std::string::npos);
  EXPECT_NE(expect_schema_error("{" + v + R"(,"size":[1,1,1],"matrices":[[[1]]],"provenance":{"args":{}}})")
                .find("/provenance"),
            std::string::npos);
}

TEST(Document, SchemaErrorPointsAtOffendingValue) {
  // Serialized layout: the second matrix row sits on line 7.
  std::string text = serialize(SystemDocument{
      std::string(kSchemaVersion), classical(2), std::nullopt});
  const std::size_t at = text.find("[0, 1]");
  ASSERT_NE(at, std::string::npos);
  text.replace(at + 4, 1, "\"x\"");
  const std::string msg = expect_schema_error(text);
  EXPECT_NE(msg.find("line 7, column 11 (/matrices/0/1/1)"), std::string::npos)
      << msg;
}

TEST(Document, SchemaErrorLocatesKeysWithEscapes) {
  const std::string msg = expect_schema_error(
      "{\"schema_version\": \"sosq.system/1\",\n\"a\\\"/b\": 1,\n"
      "\"size\": [1, 1, 1], \"matrices\": [[[1]]]}");
  EXPECT_NE(msg.find("line 2, column 10 (/a\"~1b)"), std::string::npos) << msg;
}

TEST(Document, SchemaErrorInDeepProvenance) {
  std::string prov = R"({"operation":"x","args":{},"inputs":[)";
  std::string tail = "]}";
  for (int d = 0; d < 200; ++d) {
    prov += R"({"operation":"x","args":{},"inputs":[)";
    tail += "]}";
  }
  const std::string text =
      R"({"schema_version":"sosq.system/1","size":[1,1,1],"matrices":[[[1]]],)"
      "\n\"provenance\":" + prov + R"({"operation":7})" + tail + "}";
  const std::string msg = expect_schema_error(text);
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("/operation): expected a string"), std::string::npos)
      << msg;
}
