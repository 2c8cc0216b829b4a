#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quml/diagnostics.hpp"

namespace quml {

enum class TokenKind {
  kw_model,
  kw_classical,
  kw_quantum,
  kw_type,
  kw_class,
  kw_attr,
  kw_op,
  kw_private,
  kw_inherit,
  kw_from,
  kw_compose,
  kw_aggregate,
  kw_has,
  kw_assoc,
  kw_with,
  kw_sequence,
  kw_lifeline,
  kw_msg,
  kw_qmsg,
  ident,
  integer,
  lbrace,
  rbrace,
  lparen,
  rparen,
  lbracket,
  rbracket,
  colon,
  comma,
  arrow,      // ->
  ret_arrow,  // -->
  eof,
  invalid,
};

struct Token {
  TokenKind kind = TokenKind::eof;
  std::string_view text;  // view into the source buffer
  SourceSpan span;
};

const char* token_kind_name(TokenKind k);

// Whole-input scan. Bytes that fit no token become `invalid` tokens; the
// parser turns them into E001 diagnostics. Never throws on any byte input.
std::vector<Token> lex(std::string_view source, const std::string& file);

}  // namespace quml
