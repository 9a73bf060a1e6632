#ifndef LDLOG_ERRORS_H_
#define LDLOG_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace ldlog {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LexError : public Error {
 public:
  LexError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected,
             const std::string& found);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

class ElabError : public Error {
 public:
  enum class Kind {
    kUnknownUseName,
    kDuplicateName,
    kArityMismatch,
    kNonGroundFact,
    kUnboundQueryVar,
    kUnknownField,
    kComparisonAsTerm,
    kBadProjection,
    kNotAnAtom,
    kBuiltinHead,
    kBuiltinQuery,
    kMisplacedPlaceholder,
    kNonGroundDef,
    kLibraryStatement,
  };

  ElabError(Kind kind, std::string name, const std::string& detail, int line);
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  std::string name_;
  int line_;
};

const char* to_string(ElabError::Kind kind);

// Raised by compose when two substitutions disagree on a key or would
// combine into a cyclic binding.
class ConflictingBinding : public Error {
 public:
  using Error::Error;
};

class SolveError : public Error {
 public:
  enum class Kind {
    kFlounderedBuiltin,
    kNonGroundBuiltin,
    kTypeMismatch,
    kNonGroundAnswer,
    kBuiltinNotUnifiable,
  };

  SolveError(Kind kind, const std::string& detail);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(SolveError::Kind kind);

// Raised by the forward-chaining oracle on a clause that is not range
// restricted.
class UnsafeRule : public Error {
 public:
  explicit UnsafeRule(std::string clause_name);
  const std::string& clause_name() const { return clause_name_; }

 private:
  std::string clause_name_;
};

}  // namespace ldlog

#endif  // LDLOG_ERRORS_H_
