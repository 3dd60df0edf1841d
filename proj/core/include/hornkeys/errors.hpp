#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hornkeys {

/// Malformed or out-of-range input (bad file, index >= n, tautological clause).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A parse failure with the 1-based line it was found on.
class ParseError : public InputError {
public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A configurable size guard was exceeded. `count` is how far the computation
/// got before giving up (sets produced, subsets scanned, clauses planned).
class ResourceError : public std::runtime_error {
public:
  ResourceError(const std::string& what, std::size_t count)
      : std::runtime_error(what), count_(count) {}

  std::size_t count() const noexcept { return count_; }

private:
  std::size_t count_;
};

/// A caller violated an operation's precondition (e.g. minimizing a non-key).
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace hornkeys
