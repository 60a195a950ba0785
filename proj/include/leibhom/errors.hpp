#pragma once

#include <stdexcept>
#include <string>

namespace leibhom {

/// Base of every error raised by the library. Each subclass names a
/// contract violation; most of them signal a convention bug upstream
/// rather than bad user input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LEIBHOM_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

LEIBHOM_DEFINE_ERROR(ShapeMismatch);
LEIBHOM_DEFINE_ERROR(CompositionNotZero);
LEIBHOM_DEFINE_ERROR(NotInvariant);
LEIBHOM_DEFINE_ERROR(IllDefinedQuotient);
LEIBHOM_DEFINE_ERROR(IllDefinedAction);
LEIBHOM_DEFINE_ERROR(NotInCategory);
LEIBHOM_DEFINE_ERROR(WeightOverflow);
LEIBHOM_DEFINE_ERROR(DifferentialSquareNonzero);
LEIBHOM_DEFINE_ERROR(NotAChainMap);
LEIBHOM_DEFINE_ERROR(ParseError);
LEIBHOM_DEFINE_ERROR(AxiomError);
LEIBHOM_DEFINE_ERROR(BudgetExceeded);

#undef LEIBHOM_DEFINE_ERROR

}  // namespace leibhom
