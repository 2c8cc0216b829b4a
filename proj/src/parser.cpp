#include "quml/parser.hpp"

#include <charconv>
#include <utility>

#include "quml/lexer.hpp"

namespace quml {
namespace {

bool starts_top_level(TokenKind k) {
  switch (k) {
    case TokenKind::kw_classical:
    case TokenKind::kw_quantum:
    case TokenKind::kw_class:
    case TokenKind::kw_inherit:
    case TokenKind::kw_compose:
    case TokenKind::kw_aggregate:
    case TokenKind::kw_assoc:
    case TokenKind::kw_sequence:
      return true;
    default:
      return false;
  }
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::ident: return "identifier '" + std::string(t.text) + "'";
    case TokenKind::integer: return "integer '" + std::string(t.text) + "'";
    case TokenKind::invalid: return "invalid character";
    case TokenKind::eof: return "end of file";
    default: return token_kind_name(t.kind);
  }
}

class Parser {
 public:
  Parser(std::string_view source, const std::string& file)
      : tokens_(lex(source, file)) {}

  ParseResult run() {
    ParseResult result;
    result.model = parse_model();
    result.diagnostics = std::move(diags_);
    sort_diagnostics(result.diagnostics);
    return result;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& peek(std::size_t k = 1) const {
    const std::size_t i = pos_ + k;
    return tokens_[i < tokens_.size() ? i : tokens_.size() - 1];
  }
  bool at(TokenKind k) const { return cur().kind == k; }

  Token advance() {
    Token t = cur();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  bool match(TokenKind k) {
    if (!at(k)) return false;
    advance();
    return true;
  }

  // Emits E001 and leaves the cursor in place on mismatch.
  std::optional<Token> expect(TokenKind k, const std::string& context) {
    if (at(k)) return advance();
    error("expected " + std::string(token_kind_name(k)) + " " + context + ", found " +
          describe(cur()));
    return std::nullopt;
  }

  void error(std::string message) { error_at(cur().span, std::move(message)); }
  void error_at(SourceSpan span, std::string message) {
    diags_.push_back(make_diag("E001", std::move(message), std::move(span)));
  }

  SourceSpan span_from(const SourceSpan& start) const {
    SourceSpan s = start;
    s.end = last_end_;
    return s;
  }
  void note_end() { last_end_ = tokens_[pos_ == 0 ? 0 : pos_ - 1].span.end; }

  Token take() {
    Token t = advance();
    last_end_ = t.span.end;
    return t;
  }

  ast::Name take_name(const std::string& context) {
    auto tok = expect(TokenKind::ident, context);
    if (!tok) return ast::Name{"", cur().span};
    last_end_ = tok->span.end;
    return ast::Name{std::string(tok->text), tok->span};
  }

  // Skips to the next plausible top-level declaration. Callers that consumed
  // nothing since entering the current declaration must advance first, or the
  // main loop would retry the same token forever.
  void sync_top_level() {
    while (!at(TokenKind::eof) && !starts_top_level(cur().kind)) advance();
  }

  ast::ParsedModel parse_model() {
    ast::ParsedModel model;
    if (!expect(TokenKind::kw_model, "at the start of the file")) {
      sync_top_level();
    } else {
      model.name = take_name("after 'model'");
    }

    while (!at(TokenKind::eof)) {
      switch (cur().kind) {
        case TokenKind::kw_classical:
          parse_type_decl(model);
          break;
        case TokenKind::kw_quantum:
          if (peek().kind == TokenKind::kw_type) {
            parse_type_decl(model);
          } else if (peek().kind == TokenKind::kw_class) {
            parse_class(model);
          } else {
            error("expected 'type' or 'class' after 'quantum', found " + describe(peek()));
            advance();
            sync_top_level();
          }
          break;
        case TokenKind::kw_class:
          parse_class(model);
          break;
        case TokenKind::kw_inherit:
        case TokenKind::kw_compose:
        case TokenKind::kw_aggregate:
        case TokenKind::kw_assoc:
          parse_relationship(model);
          break;
        case TokenKind::kw_sequence:
          parse_sequence(model);
          break;
        default:
          error("expected a declaration (type, class, relationship or sequence), found " +
                describe(cur()));
          advance();
          sync_top_level();
          break;
      }
    }
    return model;
  }

  void parse_type_decl(ast::ParsedModel& model) {
    const SourceSpan start = cur().span;
    ast::TypeDeclSyntax decl;
    decl.nature = cur().kind == TokenKind::kw_quantum ? Nature::quantum : Nature::classical;
    take();  // 'classical' | 'quantum'
    if (!expect(TokenKind::kw_type, "in type declaration")) {
      sync_top_level();
      return;
    }
    note_end();
    decl.name = take_name("after 'type'");
    if (decl.name.text.empty()) {
      sync_top_level();
      return;
    }
    decl.span = span_from(start);
    model.decls.emplace_back(std::move(decl));
  }

  void parse_class(ast::ParsedModel& model) {
    const SourceSpan start = cur().span;
    ast::ClassSyntax cls;
    cls.quantum_marker = match(TokenKind::kw_quantum);
    take();  // 'class'
    cls.name = take_name("after 'class'");
    if (cls.name.text.empty() || !expect(TokenKind::lbrace, "to open the class body")) {
      sync_top_level();
      return;
    }
    note_end();

    while (!at(TokenKind::rbrace) && !at(TokenKind::eof)) {
      // `quantum` may open either a member or, after a missing '}', the next
      // top-level declaration.
      if (at(TokenKind::kw_quantum) &&
          (peek().kind == TokenKind::kw_class || peek().kind == TokenKind::kw_type)) {
        break;
      }
      if (starts_top_level(cur().kind) && !at(TokenKind::kw_quantum)) break;
      if (!parse_member(cls)) sync_member();
    }
    if (!expect(TokenKind::rbrace, "to close class '" + cls.name.text + "'")) {
      cls.span = span_from(start);
      model.decls.emplace_back(std::move(cls));
      return;
    }
    note_end();
    cls.span = span_from(start);
    model.decls.emplace_back(std::move(cls));
  }

  void sync_member() {
    if (!at(TokenKind::rbrace) && !at(TokenKind::eof)) advance();
    while (!at(TokenKind::rbrace) && !at(TokenKind::eof)) {
      switch (cur().kind) {
        case TokenKind::kw_quantum:
        case TokenKind::kw_private:
        case TokenKind::kw_attr:
        case TokenKind::kw_op:
          return;
        default:
          if (starts_top_level(cur().kind)) return;
          advance();
      }
    }
  }

  bool parse_member(ast::ClassSyntax& cls) {
    const SourceSpan start = cur().span;
    const bool quantum_marker = match(TokenKind::kw_quantum);
    const bool is_private = match(TokenKind::kw_private);

    if (at(TokenKind::kw_attr)) {
      take();
      ast::AttrSyntax attr;
      attr.quantum_marker = quantum_marker;
      attr.is_private = is_private;
      attr.name = take_name("after 'attr'");
      if (attr.name.text.empty()) return false;
      if (!expect(TokenKind::colon, "after attribute name")) return false;
      note_end();
      auto type = parse_type_ref();
      if (!type) return false;
      attr.type = std::move(*type);
      attr.span = span_from(start);
      cls.members.emplace_back(std::move(attr));
      return true;
    }

    if (at(TokenKind::kw_op)) {
      take();
      ast::OpSyntax op;
      op.quantum_marker = quantum_marker;
      op.is_private = is_private;
      op.name = take_name("after 'op'");
      if (op.name.text.empty()) return false;
      if (!expect(TokenKind::lparen, "to open the parameter list")) return false;
      note_end();
      if (!at(TokenKind::rparen)) {
        while (true) {
          ast::ParamSyntax param;
          param.name = take_name("as parameter name");
          if (param.name.text.empty()) return false;
          if (!expect(TokenKind::colon, "after parameter name")) return false;
          auto type = parse_type_ref();
          if (!type) return false;
          param.type = std::move(*type);
          op.params.push_back(std::move(param));
          if (!match(TokenKind::comma)) break;
        }
      }
      if (!expect(TokenKind::rparen, "to close the parameter list")) return false;
      note_end();
      if (match(TokenKind::arrow)) {
        auto type = parse_type_ref();
        if (!type) return false;
        op.ret = std::move(*type);
      }
      op.span = span_from(start);
      cls.members.emplace_back(std::move(op));
      return true;
    }

    error("expected 'attr' or 'op'" + std::string(quantum_marker || is_private ? " after member markers" : " in class body") +
          ", found " + describe(cur()));
    return false;
  }

  std::optional<ast::TypeRefSyntax> parse_type_ref() {
    ast::TypeRefSyntax ref;
    const SourceSpan start = cur().span;
    ref.base = take_name("as a type name");
    if (ref.base.text.empty()) return std::nullopt;
    if (match(TokenKind::lbracket)) {
      auto len = expect(TokenKind::integer, "as array length");
      if (!len) return std::nullopt;
      std::uint64_t value = 0;
      const char* first = len->text.data();
      const char* last = first + len->text.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        diags_.push_back(make_diag("E002", "invalid array length '" + std::string(len->text) + "'",
                                   len->span));
      } else if (value == 0) {
        diags_.push_back(make_diag("E002", "array length must be a positive integer", len->span));
      } else {
        ref.array_len = value;
      }
      if (!expect(TokenKind::rbracket, "to close the array length")) return std::nullopt;
      note_end();
    }
    ref.span = span_from(start);
    return ref;
  }

  void parse_relationship(ast::ParsedModel& model) {
    const SourceSpan start = cur().span;
    ast::RelSyntax rel;
    TokenKind link = TokenKind::kw_from;
    switch (cur().kind) {
      case TokenKind::kw_inherit:
        rel.kind = RelKind::inheritance;
        link = TokenKind::kw_from;
        break;
      case TokenKind::kw_compose:
        rel.kind = RelKind::composition;
        link = TokenKind::kw_has;
        break;
      case TokenKind::kw_aggregate:
        rel.kind = RelKind::aggregation;
        link = TokenKind::kw_has;
        break;
      default:
        rel.kind = RelKind::association;
        link = TokenKind::kw_with;
        break;
    }
    take();
    rel.a = take_name("as relationship endpoint");
    if (rel.a.text.empty()) {
      sync_top_level();
      return;
    }
    if (!expect(link, "in relationship")) {
      sync_top_level();
      return;
    }
    note_end();
    rel.b = take_name("as relationship endpoint");
    if (rel.b.text.empty()) {
      sync_top_level();
      return;
    }
    rel.span = span_from(start);
    model.decls.emplace_back(std::move(rel));
  }

  void parse_sequence(ast::ParsedModel& model) {
    const SourceSpan start = cur().span;
    ast::SequenceSyntax seq;
    take();  // 'sequence'
    seq.name = take_name("after 'sequence'");
    if (seq.name.text.empty() || !expect(TokenKind::lbrace, "to open the sequence body")) {
      sync_top_level();
      return;
    }
    note_end();

    while (at(TokenKind::kw_lifeline)) {
      const SourceSpan lstart = cur().span;
      take();
      ast::LifelineSyntax life;
      life.alias = take_name("after 'lifeline'");
      if (life.alias.text.empty()) {
        sync_sequence_item();
        continue;
      }
      if (!expect(TokenKind::colon, "after lifeline alias")) {
        sync_sequence_item();
        continue;
      }
      note_end();
      life.class_name = take_name("as lifeline class");
      if (life.class_name.text.empty()) {
        sync_sequence_item();
        continue;
      }
      life.span = span_from(lstart);
      seq.lifelines.push_back(std::move(life));
    }

    while (at(TokenKind::kw_msg) || at(TokenKind::kw_qmsg)) {
      const SourceSpan mstart = cur().span;
      ast::MessageSyntax msg;
      msg.declared = at(TokenKind::kw_qmsg) ? Nature::quantum : Nature::classical;
      take();
      msg.from = take_name("as message sender");
      if (msg.from.text.empty()) {
        sync_sequence_item();
        continue;
      }
      if (at(TokenKind::arrow)) {
        msg.kind = MsgKind::call;
        take();
      } else if (at(TokenKind::ret_arrow)) {
        msg.kind = MsgKind::ret;
        take();
      } else {
        error("expected '->' or '-->' in message, found " + describe(cur()));
        sync_sequence_item();
        continue;
      }
      msg.to = take_name("as message receiver");
      if (msg.to.text.empty()) {
        sync_sequence_item();
        continue;
      }
      if (!expect(TokenKind::colon, "before the operation name")) {
        sync_sequence_item();
        continue;
      }
      note_end();
      msg.op = take_name("as the operation name");
      if (msg.op.text.empty()) {
        sync_sequence_item();
        continue;
      }
      msg.span = span_from(mstart);
      seq.messages.push_back(std::move(msg));
    }

    if (at(TokenKind::kw_lifeline)) {
      error("lifelines must be declared before messages");
      advance();
      sync_top_level();
    } else if (match(TokenKind::rbrace)) {
      note_end();
    } else {
      error("expected '}' to close sequence '" + seq.name.text + "', found " + describe(cur()));
      sync_top_level();
    }
    seq.span = span_from(start);
    model.decls.emplace_back(std::move(seq));
  }

  void sync_sequence_item() {
    if (!at(TokenKind::rbrace) && !at(TokenKind::eof)) advance();
    while (!at(TokenKind::rbrace) && !at(TokenKind::eof)) {
      switch (cur().kind) {
        case TokenKind::kw_lifeline:
        case TokenKind::kw_msg:
        case TokenKind::kw_qmsg:
          return;
        default:
          if (starts_top_level(cur().kind)) return;
          advance();
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  SourcePos last_end_{1, 1};
  std::vector<Diagnostic> diags_;
};

}  // namespace

ParseResult parse(std::string_view source, const std::string& file) {
  return Parser(source, file).run();
}

}  // namespace quml
