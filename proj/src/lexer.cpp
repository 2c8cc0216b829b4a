#include "quml/lexer.hpp"

#include <unordered_map>

namespace quml {
namespace {

const std::unordered_map<std::string_view, TokenKind>& keyword_table() {
  static const std::unordered_map<std::string_view, TokenKind> table = {
      {"model", TokenKind::kw_model},       {"classical", TokenKind::kw_classical},
      {"quantum", TokenKind::kw_quantum},   {"type", TokenKind::kw_type},
      {"class", TokenKind::kw_class},       {"attr", TokenKind::kw_attr},
      {"op", TokenKind::kw_op},             {"private", TokenKind::kw_private},
      {"inherit", TokenKind::kw_inherit},   {"from", TokenKind::kw_from},
      {"compose", TokenKind::kw_compose},   {"aggregate", TokenKind::kw_aggregate},
      {"has", TokenKind::kw_has},           {"assoc", TokenKind::kw_assoc},
      {"with", TokenKind::kw_with},         {"sequence", TokenKind::kw_sequence},
      {"lifeline", TokenKind::kw_lifeline}, {"msg", TokenKind::kw_msg},
      {"qmsg", TokenKind::kw_qmsg},
  };
  return table;
}

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

const char* token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::kw_model: return "'model'";
    case TokenKind::kw_classical: return "'classical'";
    case TokenKind::kw_quantum: return "'quantum'";
    case TokenKind::kw_type: return "'type'";
    case TokenKind::kw_class: return "'class'";
    case TokenKind::kw_attr: return "'attr'";
    case TokenKind::kw_op: return "'op'";
    case TokenKind::kw_private: return "'private'";
    case TokenKind::kw_inherit: return "'inherit'";
    case TokenKind::kw_from: return "'from'";
    case TokenKind::kw_compose: return "'compose'";
    case TokenKind::kw_aggregate: return "'aggregate'";
    case TokenKind::kw_has: return "'has'";
    case TokenKind::kw_assoc: return "'assoc'";
    case TokenKind::kw_with: return "'with'";
    case TokenKind::kw_sequence: return "'sequence'";
    case TokenKind::kw_lifeline: return "'lifeline'";
    case TokenKind::kw_msg: return "'msg'";
    case TokenKind::kw_qmsg: return "'qmsg'";
    case TokenKind::ident: return "identifier";
    case TokenKind::integer: return "integer";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::colon: return "':'";
    case TokenKind::comma: return "','";
    case TokenKind::arrow: return "'->'";
    case TokenKind::ret_arrow: return "'-->'";
    case TokenKind::eof: return "end of file";
    case TokenKind::invalid: return "invalid character";
  }
  return "token";
}

std::vector<Token> lex(std::string_view src, const std::string& file) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;

  if (src.size() >= 3 && src.substr(0, 3) == "\xEF\xBB\xBF") i = 3;

  auto step = [&](std::size_t n) {
    for (; n > 0; --n, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      step(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') step(1);
      continue;
    }

    Token tok;
    tok.span.file = file;
    tok.span.start = {line, col};
    const std::size_t begin = i;

    if (is_ident_start(c)) {
      while (i < src.size() && is_ident_char(src[i])) step(1);
      tok.text = src.substr(begin, i - begin);
      auto it = keyword_table().find(tok.text);
      tok.kind = it == keyword_table().end() ? TokenKind::ident : it->second;
    } else if (is_digit(c)) {
      while (i < src.size() && is_digit(src[i])) step(1);
      tok.text = src.substr(begin, i - begin);
      tok.kind = TokenKind::integer;
    } else {
      switch (c) {
        case '{': tok.kind = TokenKind::lbrace; step(1); break;
        case '}': tok.kind = TokenKind::rbrace; step(1); break;
        case '(': tok.kind = TokenKind::lparen; step(1); break;
        case ')': tok.kind = TokenKind::rparen; step(1); break;
        case '[': tok.kind = TokenKind::lbracket; step(1); break;
        case ']': tok.kind = TokenKind::rbracket; step(1); break;
        case ':': tok.kind = TokenKind::colon; step(1); break;
        case ',': tok.kind = TokenKind::comma; step(1); break;
        case '-':
          if (src.substr(i, 3) == "-->") {
            tok.kind = TokenKind::ret_arrow;
            step(3);
          } else if (src.substr(i, 2) == "->") {
            tok.kind = TokenKind::arrow;
            step(2);
          } else {
            tok.kind = TokenKind::invalid;
            step(1);
          }
          break;
        default:
          tok.kind = TokenKind::invalid;
          step(1);
          break;
      }
      tok.text = src.substr(begin, i - begin);
    }

    tok.span.end = {line, col};
    out.push_back(std::move(tok));
  }

  Token eof;
  eof.kind = TokenKind::eof;
  eof.span.file = file;
  eof.span.start = {line, col};
  eof.span.end = {line, col};
  out.push_back(std::move(eof));
  return out;
}

}  // namespace quml
