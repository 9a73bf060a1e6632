#include "ldlog/errors.h"

#include <sstream>

namespace ldlog {
namespace {

std::string position_message(int line, int column, const std::string& what) {
  std::ostringstream os;
  os << line << ":" << column << ": " << what;
  return os.str();
}

std::string expected_message(const std::vector<std::string>& expected,
                             const std::string& found) {
  std::ostringstream os;
  os << "expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
    os << expected[i];
  }
  os << ", found " << found;
  return os.str();
}

}  // namespace

LexError::LexError(int line, int column, const std::string& message)
    : Error(position_message(line, column, "lex error: " + message)),
      line_(line),
      column_(column) {}

ParseError::ParseError(int line, int column, std::vector<std::string> expected,
                       const std::string& found)
    : Error(position_message(line, column,
                             "parse error: " + expected_message(expected, found))),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

ElabError::ElabError(Kind kind, std::string name, const std::string& detail,
                     int line)
    : Error("line " + std::to_string(line) + ": " + to_string(kind) + " `" +
            name + "`" + (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      name_(std::move(name)),
      line_(line) {}

const char* to_string(ElabError::Kind kind) {
  switch (kind) {
    case ElabError::Kind::kUnknownUseName: return "UnknownUseName";
    case ElabError::Kind::kDuplicateName: return "DuplicateName";
    case ElabError::Kind::kArityMismatch: return "ArityMismatch";
    case ElabError::Kind::kNonGroundFact: return "NonGroundFact";
    case ElabError::Kind::kUnboundQueryVar: return "UnboundQueryVar";
    case ElabError::Kind::kUnknownField: return "UnknownField";
    case ElabError::Kind::kComparisonAsTerm: return "ComparisonAsTerm";
    case ElabError::Kind::kBadProjection: return "BadProjection";
    case ElabError::Kind::kNotAnAtom: return "NotAnAtom";
    case ElabError::Kind::kBuiltinHead: return "BuiltinHead";
    case ElabError::Kind::kBuiltinQuery: return "BuiltinQuery";
    case ElabError::Kind::kMisplacedPlaceholder: return "MisplacedPlaceholder";
    case ElabError::Kind::kNonGroundDef: return "NonGroundDef";
    case ElabError::Kind::kLibraryStatement: return "LibraryStatement";
  }
  return "ElabError";
}

SolveError::SolveError(Kind kind, const std::string& detail)
    : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

const char* to_string(SolveError::Kind kind) {
  switch (kind) {
    case SolveError::Kind::kFlounderedBuiltin: return "FlounderedBuiltin";
    case SolveError::Kind::kNonGroundBuiltin: return "NonGroundBuiltin";
    case SolveError::Kind::kTypeMismatch: return "TypeMismatch";
    case SolveError::Kind::kNonGroundAnswer: return "NonGroundAnswer";
    case SolveError::Kind::kBuiltinNotUnifiable: return "BuiltinNotUnifiable";
  }
  return "SolveError";
}

UnsafeRule::UnsafeRule(std::string clause_name)
    : Error("UnsafeRule: clause `" + clause_name +
            "` is not range restricted"),
      clause_name_(std::move(clause_name)) {}

}  // namespace ldlog
