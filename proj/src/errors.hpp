#ifndef CU2_ERRORS_HPP
#define CU2_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cu2 {

/// Surface-syntax error with the byte offset and the tokens that would
/// have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset, std::vector<std::string> expected)
      : std::runtime_error(std::move(message)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class NotInIdealError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InIdealError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroElementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cu2

#endif
