// Copyright 2026 The ctilint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "ctilint/errors.hpp"
#include "ctilint/ingest.hpp"
#include "ctilint/timeutil.hpp"
#include "test_support.hpp"

using namespace ctilint;
namespace ts = ctilint::testsupport;

TEST_CASE("field path parse and render") {
  FieldPath path = FieldPath::parse("a/b/@c");
  CHECK(path.depth() == 3);
  CHECK(path.leaf().name == "c");
  CHECK(path.leaf().is_attribute);
  CHECK_FALSE(path.segments()[0].is_attribute);
  CHECK(path.to_string() == "a/b/@c");
  CHECK(path == FieldPath::parse(path.to_string()));

  CHECK_THROWS_AS(FieldPath::parse(""), SemanticError);
  CHECK_THROWS_AS(FieldPath::parse("a//b"), SemanticError);
  CHECK_THROWS_AS(FieldPath::parse("@a/b"), SemanticError);  // non-final attr
  CHECK_THROWS_AS(FieldPath::parse("a/*"), SemanticError);   // reserved
}

TEST_CASE("path patterns match suffixes") {
  FieldPath path = FieldPath::parse("doc/incident/Contact/Email");
  CHECK(path_matches(path, "Email"));
  CHECK(path_matches(path, "Contact/Email"));
  CHECK(path_matches(path, "doc/incident/Contact/Email"));
  CHECK_FALSE(path_matches(path, "Contact"));       // not the suffix
  CHECK_FALSE(path_matches(path, "Other/Email"));
  CHECK_FALSE(path_matches(path, "x/doc/incident/Contact/Email"));  // longer

  SUBCASE("wildcards bind one segment of the right kind") {
    CHECK(path_matches(path, "*/Email"));
    CHECK(path_matches(path, "Contact/*"));
    CHECK_FALSE(path_matches(path, "@*"));
    FieldPath attr = FieldPath::parse("a/@id");
    CHECK(path_matches(attr, "@*"));
    CHECK(path_matches(attr, "a/@id"));
    CHECK_FALSE(path_matches(attr, "*"));  // element wildcard, attribute leaf
  }
  SUBCASE("invalid pattern") {
    CHECK_THROWS_AS(PathPattern::parse(""), SemanticError);
    CHECK_THROWS_AS(PathPattern::parse("@a/b"), SemanticError);
  }
}

TEST_CASE("xml parse basics") {
  DocumentTree tree = parse_xml(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<!-- comment -->\n"
      "<r a=\"1\" b=\"two\">\n"
      "  <child>  text value  </child>\n"
      "  <empty/>\n"
      "</r>\n",
      "t.xml");
  REQUIRE(tree.roots.size() == 1);
  const FieldNode& root = tree.roots.front();
  CHECK(root.name() == "r");
  REQUIRE(root.children.size() == 4);
  CHECK(root.children[0].is_attribute());
  CHECK(root.children[0].path.to_string() == "r/@a");
  CHECK(root.children[0].value == "1");
  CHECK(root.children[1].value == "two");
  CHECK(root.children[2].name() == "child");
  CHECK(root.children[2].value == "text value");  // ends trimmed
  CHECK(root.children[3].value == "");
  CHECK(tree.format == DocumentFormat::kXml);
  CHECK(tree.origin == "t.xml");
}

TEST_CASE("xml character data forms") {
  DocumentTree tree = parse_xml(
      "<r>"
      "<a>x &amp; y &lt;z&gt; &quot;q&quot; &apos;s&apos;</a>"
      "<b>&#65;&#x42;</b>"
      "<c><![CDATA[<raw> & unparsed]]></c>"
      "</r>",
      "t");
  CHECK(tree.roots[0].children[0].value == "x & y <z> \"q\" 's'");
  CHECK(tree.roots[0].children[1].value == "AB");
  CHECK(tree.roots[0].children[2].value == "<raw> & unparsed");
}

TEST_CASE("xml namespaces strip prefixes and record declarations") {
  DocumentTree tree = parse_xml(
      "<ns:r xmlns:ns=\"urn:example:one\" xmlns=\"urn:example:two\">"
      "<ns:a ns:k=\"v\">1</ns:a><plain>2</plain></ns:r>",
      "t");
  const FieldNode& root = tree.roots.front();
  CHECK(root.name() == "r");
  CHECK(root.raw_name == "ns:r");
  // xmlns declarations are namespace metadata, not fields.
  REQUIRE(root.children.size() == 2);
  CHECK(root.children[0].path.to_string() == "r/a");
  CHECK(root.children[0].children[0].path.to_string() == "r/a/@k");
  CHECK(root.children[1].path.to_string() == "r/plain");
  REQUIRE(tree.declared_namespaces.size() == 2);
  CHECK(tree.declared_namespaces[0].first == "");
  CHECK(tree.declared_namespaces[0].second == "urn:example:two");
  CHECK(tree.declared_namespaces[1].first == "ns");
  CHECK(tree.declared_namespaces[1].second == "urn:example:one");
}

TEST_CASE("xml rejects doctype and processing instructions") {
  const std::string doc =
      "<?xml version=\"1.0\"?>\n<!DOCTYPE r SYSTEM \"evil.dtd\">\n<r/>";
  try {
    parse_xml(doc, "t");
    FAIL("expected UnsupportedConstructError");
  } catch (const UnsupportedConstructError& e) {
    CHECK(e.byte_offset() == doc.find("<!DOCTYPE"));
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_xml("<r><?pi data?></r>", "t"),
                  UnsupportedConstructError);
  // Entity definitions arrive via DOCTYPE, so external content can never be
  // fetched; undefined references are plain parse errors.
  CHECK_THROWS_AS(parse_xml("<r>&ext;</r>", "t"), ParseError);
}

TEST_CASE("xml malformed input carries positions") {
  SUBCASE("unclosed element") {
    CHECK_THROWS_AS(parse_xml("<r><a></r>", "t"), ParseError);
  }
  SUBCASE("duplicate attribute") {
    CHECK_THROWS_AS(parse_xml("<r a=\"1\" a=\"2\"/>", "t"), ParseError);
  }
  SUBCASE("second root") {
    CHECK_THROWS_AS(parse_xml("<r/><r/>", "t"), ParseError);
  }
  SUBCASE("text outside the root") {
    CHECK_THROWS_AS(parse_xml("<r/>trailing", "t"), ParseError);
  }
  SUBCASE("offset points at the problem") {
    const std::string doc = "<r>\n  <broken\n</r>";
    try {
      parse_xml(doc, "t");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.byte_offset() > doc.find("<broken"));
      CHECK(e.line() >= 2);
    }
  }
}

TEST_CASE("xml depth limit") {
  std::string open;
  std::string close;
  for (int i = 0; i < 300; ++i) {
    open += "<a>";
    close += "</a>";
  }
  CHECK_THROWS_AS(parse_xml(open + close, "t"), ParseError);
  std::string ok_open;
  std::string ok_close;
  for (int i = 0; i < 200; ++i) {
    ok_open += "<a>";
    ok_close += "</a>";
  }
  CHECK_NOTHROW(parse_xml(ok_open + "x" + ok_close, "t"));
}

TEST_CASE("xml write and reparse is identity on random trees") {
  ts::Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    DocumentTree tree = ts::random_document(rng);
    std::string text = write_xml(tree);
    DocumentTree back = parse_xml(text, tree.origin);
    CHECK_MESSAGE(tree_equal(tree, back), "iteration ", i, "\n", text);
  }
}

TEST_CASE("xml writer escapes markup in values") {
  DocumentTree tree;
  tree.format = DocumentFormat::kXml;
  FieldNode root;
  root.raw_name = "r";
  root.path = FieldPath{}.child("r", false);
  FieldNode attr;
  attr.raw_name = "a";
  attr.path = root.path.child("a", true);
  attr.value = "<\"&>";
  root.children.push_back(attr);
  root.value = "1 < 2 & 3 > 2";
  tree.roots.push_back(root);
  DocumentTree back = parse_xml(write_xml(tree), "t");
  CHECK(tree_equal(tree, back));
}

TEST_CASE("json documents map to field trees") {
  DocumentTree tree = parse_json_document(
      R"({"incident":{"@id":"7","name":"worm","hosts":["a","b"],
           "assessment":{"#text":"bad","severity":"high"}}})",
      "t.json");
  REQUIRE(tree.roots.size() == 1);
  const FieldNode& incident = tree.roots.front();
  CHECK(incident.path.to_string() == "incident");
  REQUIRE(incident.children.size() >= 4);
  CHECK(incident.children[0].path.to_string() == "incident/@id");
  CHECK(incident.children[0].value == "7");
  // Arrays repeat the parent segment.
  std::size_t hosts = 0;
  for (const FieldNode& child : incident.children) {
    if (child.name() == "hosts") ++hosts;
  }
  CHECK(hosts == 2);
  // The #text convention carries a value alongside children.
  for (const FieldNode& child : incident.children) {
    if (child.name() == "assessment") {
      CHECK(child.value == "bad");
      REQUIRE(child.children.size() == 1);
      CHECK(child.children[0].value == "high");
    }
  }
  CHECK(tree.format == DocumentFormat::kJson);
}

TEST_CASE("json top-level forms") {
  CHECK(parse_json_document("[1,2,3]", "t").roots.size() == 3);
  CHECK(parse_json_document("[1,2,3]", "t").roots[0].name() == "item");
  CHECK(parse_json_document("42", "t").roots[0].name() == "value");
  CHECK(parse_json_document("42", "t").roots[0].value == "42");
  CHECK(parse_json_document(R"({"a":1,"b":2})", "t").roots.size() == 2);
  CHECK_THROWS_AS(parse_json_document("{respond", "t"), ParseError);
}

TEST_CASE("json write and reparse is identity") {
  DocumentTree tree = parse_json_document(
      R"({"a":{"@k":"v","b":["1","2"],"c":{"#text":"t","d":"x"}},"e":"f"})",
      "t");
  DocumentTree back = parse_json_document(write_json_document(tree), "t");
  CHECK(tree_equal(tree, back));
}

TEST_CASE("format sniffing and dispatch") {
  CHECK(sniff_format("  <a/>") == DocumentFormat::kXml);
  CHECK(sniff_format("\n{\"a\":1}") == DocumentFormat::kJson);
  CHECK(sniff_format("[1]") == DocumentFormat::kJson);
  CHECK_THROWS_AS(sniff_format("plain text"), ParseError);
  CHECK_THROWS_AS(sniff_format("   "), ParseError);
  CHECK(parse_document("<a>1</a>", "t").format == DocumentFormat::kXml);
  CHECK(parse_document("{\"a\":\"1\"}", "t").format == DocumentFormat::kJson);
}

TEST_CASE("standard detection") {
  CHECK(detect_standard(parse_xml("<IODEF-Document/>", "t")) == "iodef");
  CHECK(detect_standard(parse_xml("<STIX_Package/>", "t")) == "stix");
  CHECK(detect_standard(parse_xml("<Benchmark/>", "t")) == "xccdf");
  CHECK(detect_standard(parse_xml("<oval_definitions/>", "t")) == "oval");
  CHECK(detect_standard(parse_xml("<Observables/>", "t")) == "cybox");
  // Falls back to declared namespaces.
  CHECK(detect_standard(parse_xml(
            "<Report xmlns=\"http://maec.mitre.org/XMLSchema/maec-bundle-4\"/>",
            "t")) == "maec");
  CHECK(detect_standard(parse_xml("<Unrelated/>", "t")) == "unknown");
  // JSON documents detect through their root key.
  CHECK(detect_standard(parse_json_document(R"({"iodef-document":{}})",
                                            "t")) == "iodef");
}

TEST_CASE("rfc3339 parsing and rendering") {
  auto when = parse_rfc3339("2001-09-13T18:11:21+02:00");
  REQUIRE(when.has_value());
  CHECK(format_rfc3339(*when) == "2001-09-13T16:11:21Z");

  auto zulu = parse_rfc3339("2024-02-29T23:59:59Z");
  REQUIRE(zulu.has_value());
  CHECK(format_rfc3339(*zulu) == "2024-02-29T23:59:59Z");

  auto fractional = parse_rfc3339("2024-01-01T00:00:00.75Z");
  REQUIRE(fractional.has_value());
  CHECK(format_rfc3339(*fractional) == "2024-01-01T00:00:00Z");

  CHECK_FALSE(parse_rfc3339("2024-13-01T00:00:00Z").has_value());
  CHECK_FALSE(parse_rfc3339("2023-02-29T00:00:00Z").has_value());
  CHECK_FALSE(parse_rfc3339("2024-01-01 00:00:00Z").has_value());
  CHECK_FALSE(parse_rfc3339("2024-01-01T00:00:00").has_value());
  CHECK_FALSE(parse_rfc3339("not a time").has_value());

  UtcParts parts = utc_parts(*zulu);
  CHECK(parts.year == 2024);
  CHECK(parts.month == 2);
  CHECK(parts.day == 29);
  CHECK(from_utc_parts(parts) == *zulu);
}

TEST_CASE("duration parsing") {
  using std::chrono::seconds;
  CHECK(parse_duration("7d") == seconds(7 * 86400));
  CHECK(parse_duration("12h") == seconds(12 * 3600));
  CHECK(parse_duration("45m") == seconds(45 * 60));
  CHECK(parse_duration("30s") == seconds(30));
  CHECK(parse_duration("90") == seconds(90));
  CHECK_FALSE(parse_duration("0d").has_value());
  CHECK_FALSE(parse_duration("-3h").has_value());
  CHECK_FALSE(parse_duration("3w").has_value());
  CHECK_FALSE(parse_duration("").has_value());
}
