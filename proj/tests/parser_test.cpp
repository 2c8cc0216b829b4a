#include <random>
#include <string>

#include "doctest.h"
#include "quml/parser.hpp"
#include "support/corpus.hpp"

using namespace quml;

namespace {

const ast::ClassSyntax& first_class(const ast::ParsedModel& m) {
  for (const auto& decl : m.decls) {
    if (const auto* cls = std::get_if<ast::ClassSyntax>(&decl)) return *cls;
  }
  throw std::runtime_error("no class in parsed model");
}

std::size_t count_code(const std::vector<Diagnostic>& diags, std::string_view code) {
  std::size_t n = 0;
  for (const auto& d : diags) {
    if (d.code == code) ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("minimal model") {
    auto result = parse("model m  class A { attr x: int }", "test.quml");
    REQUIRE(result.ok());
    CHECK(result.model.name.text == "m");
    REQUIRE(result.model.decls.size() == 1);
    const auto& cls = first_class(result.model);
    CHECK(cls.name.text == "A");
    REQUIRE(cls.members.size() == 1);
    const auto& attr = std::get<ast::AttrSyntax>(cls.members[0]);
    CHECK(attr.name.text == "x");
    CHECK(attr.type.base.text == "int");
    CHECK_FALSE(attr.type.array_len.has_value());
  }

  TEST_CASE("missing colon reports E001 at the offending token and recovers") {
    auto result = parse("model m\nclass A { attr x int }\nclass B { op f() }\n", "test.quml");
    REQUIRE(result.diagnostics.size() >= 1);
    CHECK(result.diagnostics[0].code == "E001");
    CHECK(result.diagnostics[0].span.start.line == 2);
    CHECK(result.diagnostics[0].span.start.col == 18);  // the 'int' token
    // Parsing continued: class B was still collected.
    bool saw_b = false;
    for (const auto& decl : result.model.decls) {
      if (const auto* cls = std::get_if<ast::ClassSyntax>(&decl)) {
        saw_b = saw_b || cls->name.text == "B";
      }
    }
    CHECK(saw_b);
  }

  TEST_CASE("multiple errors in one pass") {
    auto result = parse("model m\nclass A { attr x int }\nclass B { op f( }\n", "t.quml");
    CHECK(count_code(result.diagnostics, "E001") >= 2);
  }

  TEST_CASE("comments are skipped") {
    auto result = parse("// heading\nmodel m // trailing\nclass A {} // done\n", "t.quml");
    REQUIRE(result.ok());
    CHECK(result.model.decls.size() == 1);
  }

  TEST_CASE("zero array length is E002") {
    auto result = parse("model m  class A { attr x: qubit[0] }", "t.quml");
    CHECK(count_code(result.diagnostics, "E002") == 1);
  }

  TEST_CASE("oversized array length is E002") {
    auto result = parse("model m  class A { attr x: qubit[99999999999999999999999] }", "t.quml");
    CHECK(count_code(result.diagnostics, "E002") == 1);
  }

  TEST_CASE("array lengths parse") {
    auto result = parse("model m  class A { attr x: qubit[12] }", "t.quml");
    REQUIRE(result.ok());
    const auto& attr = std::get<ast::AttrSyntax>(first_class(result.model).members[0]);
    CHECK(attr.type.array_len == 12u);
  }

  TEST_CASE("'classical class' is a syntax error") {
    auto result = parse("model m  classical class A {}", "t.quml");
    CHECK(count_code(result.diagnostics, "E001") >= 1);
  }

  TEST_CASE("marker order is fixed: quantum before private") {
    auto good = parse("model m  class A { quantum private attr s: qstate }", "t.quml");
    CHECK(good.ok());
    auto bad = parse("model m  class A { private quantum attr s: qstate }", "t.quml");
    CHECK_FALSE(bad.ok());
  }

  TEST_CASE("call and return arrows") {
    auto result = parse(
        "model m\n"
        "class A { op f() }\n"
        "class B { op g() }\n"
        "sequence s {\n"
        "  lifeline a: A\n"
        "  lifeline b: B\n"
        "  msg a -> b : g\n"
        "  qmsg b --> a : g\n"
        "}\n",
        "t.quml");
    REQUIRE(result.ok());
    const auto& seq = std::get<ast::SequenceSyntax>(result.model.decls.back());
    REQUIRE(seq.messages.size() == 2);
    CHECK(seq.messages[0].kind == MsgKind::call);
    CHECK(seq.messages[0].declared == Nature::classical);
    CHECK(seq.messages[1].kind == MsgKind::ret);
    CHECK(seq.messages[1].declared == Nature::quantum);
  }

  TEST_CASE("lifeline after message is rejected") {
    auto result = parse(
        "model m  class A { op f() }\n"
        "sequence s { lifeline a: A  msg a -> a : f  lifeline b: A }\n",
        "t.quml");
    CHECK_FALSE(result.ok());
  }

  TEST_CASE("unterminated class body") {
    auto result = parse("model m  class A { attr x: int", "t.quml");
    CHECK(count_code(result.diagnostics, "E001") >= 1);
  }

  TEST_CASE("keywords are reserved") {
    auto result = parse("model m  class msg {}", "t.quml");
    CHECK_FALSE(result.ok());
  }

  TEST_CASE("empty input expects 'model'") {
    auto result = parse("", "t.quml");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].code == "E001");
  }

  TEST_CASE("UTF-8 BOM is tolerated") {
    auto result = parse("\xEF\xBB\xBFmodel m  class A {}", "t.quml");
    CHECK(result.ok());
  }

  TEST_CASE("spans cover nodes and diagnostics point into source") {
    auto result = parse("model m\nclass Widget {\n  attr x: int\n}\n", "t.quml");
    REQUIRE(result.ok());
    const auto& cls = first_class(result.model);
    CHECK(cls.span.start.line == 2);
    CHECK(cls.span.start.col == 1);
    CHECK(cls.span.end.line == 4);
    CHECK(cls.name.span.start.col == 7);
    const auto& attr = std::get<ast::AttrSyntax>(cls.members[0]);
    CHECK(attr.span.start.line == 3);
    CHECK(attr.span.start.col == 3);
  }

  TEST_CASE("corpus parses clean") {
    for (const auto& file : quml::testing::all_corpus_files()) {
      auto result = parse(quml::testing::read_corpus(file), file);
      CAPTURE(file);
      CHECK(result.ok());
    }
  }

  TEST_CASE("fuzz: arbitrary bytes never crash the parser") {
    std::mt19937_64 rng(0xF00D);
    std::uniform_int_distribution<int> len_dist(0, 160);
    std::uniform_int_distribution<int> byte_dist(0, 255);
    const std::string soup =
        "model class attr op quantum private { } ( ) [ ] : , -> --> msg qmsg 0 9 x _";
    for (int round = 0; round < 2000; ++round) {
      std::string input;
      const int len = len_dist(rng);
      if (round % 2 == 0) {
        for (int i = 0; i < len; ++i) input += static_cast<char>(byte_dist(rng));
      } else {
        // token soup reaches deeper parse states than raw bytes
        for (int i = 0; i < len; ++i) {
          const std::size_t start = rng() % soup.size();
          input += soup.substr(start, rng() % 6 + 1);
          input += ' ';
        }
      }
      auto result = parse(input, "fuzz.quml");
      (void)result;
    }
    CHECK(true);
  }
}
