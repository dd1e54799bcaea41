#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace pdt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedId : public Error {
 public:
  explicit MalformedId(std::string id)
      : Error("malformed identifier '" + id + "'"), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class UnknownAlternative : public Error {
 public:
  explicit UnknownAlternative(std::string id)
      : Error("unknown alternative '" + id + "'"), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// A declared `a < b` whose closure also contains `b <= a`.
class StrictViolation : public Error {
 public:
  StrictViolation(std::string left, std::string right)
      : Error("strict fact " + left + " < " + right + " is contradicted: closure contains " +
              right + " <= " + left),
        left_(std::move(left)),
        right_(std::move(right)) {}
  const std::string& left() const noexcept { return left_; }
  const std::string& right() const noexcept { return right_; }

 private:
  std::string left_;
  std::string right_;
};

class NotNormalized : public Error {
 public:
  explicit NotNormalized(std::string sum)
      : Error("weights sum to " + sum + ", expected 1"), sum_(std::move(sum)) {}
  const std::string& sum() const noexcept { return sum_; }

 private:
  std::string sum_;
};

class EmptySupport : public Error {
 public:
  EmptySupport() : Error("lottery has empty support") {}
};

class NegativeWeight : public Error {
 public:
  explicit NegativeWeight(const std::string& id) : Error("negative weight on '" + id + "'") {}
};

class AlphaOutOfRange : public Error {
 public:
  explicit AlphaOutOfRange(const std::string& alpha)
      : Error("mixing coefficient " + alpha + " is outside [0,1]") {}
};

class DegeneratePair : public Error {
 public:
  DegeneratePair() : Error("cannot decompose against two identical lotteries") {}
};

class DuplicateOfferName : public Error {
 public:
  explicit DuplicateOfferName(const std::string& name) : Error("duplicate offer name '" + name + "'") {}
};

class ForeignLottery : public Error {
 public:
  explicit ForeignLottery(const std::string& what)
      : Error("relation references a lottery outside the family: " + what) {}
};

class InconsistentTuple : public Error {
 public:
  explicit InconsistentTuple(const std::string& tuple)
      : Error("case tuple " + tuple + " is not realizable by any preorder") {}
};

class TableMismatch : public Error {
 public:
  TableMismatch(std::string report, std::size_t count)
      : Error(std::to_string(count) + " table row(s) differ:\n" + report), count_(count) {}
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

/// Parse failure with 1-based position; `column` counts code points.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
              expected),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

class DuplicateName : public Error {
 public:
  DuplicateName(const std::string& name, std::size_t line)
      : Error("line " + std::to_string(line) + ": duplicate lottery name '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace pdt
