#ifndef SOSQ_ERROR_HPP
#define SOSQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sosq {

/// Base of every error thrown by the library. Verification failures are
/// never thrown; they are reported through VerifyReport / IdentityReport.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (e.g. multiply with M.cols != N.rows).
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A checked integer operation would leave the representable range.
class ArithmeticError : public Error {
public:
  using Error::Error;
};

/// An argument lies outside the operation's domain (rho(0), classical(3), ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A system or pair is malformed: wrong matrix count, mismatched shapes.
class StructuralError : public Error {
public:
  using Error::Error;
};

/// A configured size cap, pool cap or node budget would be exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// A serialized document is malformed or uses an unknown schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

} // namespace sosq

#endif // SOSQ_ERROR_HPP
