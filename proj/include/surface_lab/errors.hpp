#ifndef SURFACE_LAB_ERRORS_HPP
#define SURFACE_LAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace surface_lab {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can catch one type and still report the specific reason.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A translation that should be a lattice vector has an odd half-coordinate.
struct NotInLattice : Error {
  using Error::Error;
};

// Riemann-Hurwitz produced a non-integral or negative genus.
struct NonIntegralGenus : Error {
  using Error::Error;
};

// An integer quotient that must be exact was not.
struct NonIntegral : Error {
  using Error::Error;
};

struct IdentityElement : Error {
  using Error::Error;
};

// curve_h was asked about a special line bundle it cannot decide.
struct AmbiguousCase : Error {
  using Error::Error;
};

struct UnsupportedTranslation : Error {
  using Error::Error;
};

struct ZeroParameter : Error {
  using Error::Error;
};

struct PoleAtLatticePoint : Error {
  using Error::Error;
};

struct DegenerateModulus : Error {
  using Error::Error;
};

struct UnknownCheck : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

}  // namespace surface_lab

#endif  // SURFACE_LAB_ERRORS_HPP
