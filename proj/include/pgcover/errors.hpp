#ifndef PGCOVER_ERRORS_HPP
#define PGCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgcover {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error {
  using Error::Error;
};
struct ModulusMismatch : Error {
  using Error::Error;
};
struct ZeroVector : Error {
  using Error::Error;
};
struct DuplicatePoint : Error {
  using Error::Error;
};
struct EvenCharacteristic : Error {
  using Error::Error;
};
struct OrbitTooLarge : Error {
  using Error::Error;
};
struct WrongCorank : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct NotACnCover : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Input file rejected; carries the 1-based line number.
struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

}  // namespace pgcover

#endif
