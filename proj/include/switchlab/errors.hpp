#pragma once

#include <stdexcept>
#include <string>

namespace switchlab {

/// Category of a library failure. The CLI maps each kind to an exit code.
enum class ErrorKind {
  construction,   // loop or duplicate edge
  range,          // vertex or parameter outside its admissible range
  precondition,   // operation called outside its domain
  infeasible,     // degree vector cannot be realized
  parse,          // malformed text input
  membership,     // graph is not a vertex of a realization graph
  undefined,      // parameter undefined on this graph
  budget,         // search or enumeration budget exhausted
  io,             // unreadable or unwritable file
  theorem,        // a proven statement was contradicted by a computation
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define SWITCHLAB_DEFINE_ERROR(Name, Kind)                              \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& message) : Error(Kind, message) {} \
  };

SWITCHLAB_DEFINE_ERROR(ConstructionError, ErrorKind::construction)
SWITCHLAB_DEFINE_ERROR(RangeError, ErrorKind::range)
SWITCHLAB_DEFINE_ERROR(PreconditionError, ErrorKind::precondition)
SWITCHLAB_DEFINE_ERROR(InfeasibleError, ErrorKind::infeasible)
SWITCHLAB_DEFINE_ERROR(ParseError, ErrorKind::parse)
SWITCHLAB_DEFINE_ERROR(MembershipError, ErrorKind::membership)
SWITCHLAB_DEFINE_ERROR(UndefinedParameterError, ErrorKind::undefined)
SWITCHLAB_DEFINE_ERROR(BudgetError, ErrorKind::budget)
SWITCHLAB_DEFINE_ERROR(IoError, ErrorKind::io)
SWITCHLAB_DEFINE_ERROR(TheoremViolation, ErrorKind::theorem)

#undef SWITCHLAB_DEFINE_ERROR

/// Process-wide switch for the brute-force cross-checks that classifiers and
/// derived parameters run alongside their fast paths. Defaults to on in
/// builds without NDEBUG.
bool verification_enabled() noexcept;
void set_verification(bool enabled) noexcept;

}  // namespace switchlab
