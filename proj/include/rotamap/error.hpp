#ifndef ROTAMAP_ERROR_HPP_
#define ROTAMAP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotamap {

  // Base for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed presentation text. `line()` is 1-based; 0 means "not tied to a
  // particular line".
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // Coset enumeration gave up before the table closed.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::size_t cosets_in_use, std::size_t cap)
        : Error("coset enumeration exceeded the cap of " + std::to_string(cap)
                + " cosets (" + std::to_string(cosets_in_use)
                + " in use); the group may be infinite, try --max-cosets"),
          _in_use(cosets_in_use),
          _cap(cap) {}

    std::size_t cosets_in_use() const noexcept {
      return _in_use;
    }
    std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _in_use;
    std::size_t _cap;
  };

  // An operation was called on input that does not meet its precondition
  // (wrong rank, not self-dual, not polytopal, ...).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A construction produced a group violating an identity it must satisfy.
  class ContractError : public Error {
   public:
    using Error::Error;
  };

  // Internal inconsistency: a proven invariant failed.
  class InconsistencyError : public Error {
   public:
    using Error::Error;
  };

}  // namespace rotamap

#endif  // ROTAMAP_ERROR_HPP_
