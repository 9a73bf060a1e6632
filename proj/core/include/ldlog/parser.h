#ifndef LDLOG_PARSER_H_
#define LDLOG_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "ldlog/syntax.h"

namespace ldlog {

// Splits DSL source into tokens; comments and whitespace are dropped and no
// end marker is appended. Throws LexError on an unterminated string, an out
// of range integer or an illegal character.
std::vector<Token> tokenize(std::string_view source);

// Parses a whole program. Throws LexError or ParseError.
Program parse_program(std::string_view source);

// Parses a single term, e.g. the atom texts found in proof certificates.
// Trailing input is an error.
TermAst parse_term(std::string_view source);

std::string render_term(const TermAst& t);
std::string render_atom(const AtomAst& a);
std::string render_statement(const StatementAst& s);
// One statement per line.
std::string render_program(const Program& p);

}  // namespace ldlog

#endif  // LDLOG_PARSER_H_
