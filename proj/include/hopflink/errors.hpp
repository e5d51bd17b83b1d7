#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HOPF_DECLARE_ERROR(Name)                 \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(std::string(#Name ": ") + what) {} \
  };

HOPF_DECLARE_ERROR(DivisionByZero)
HOPF_DECLARE_ERROR(IncompatibleOrder)
HOPF_DECLARE_ERROR(DegreeBound)
HOPF_DECLARE_ERROR(Inconsistent)
HOPF_DECLARE_ERROR(AmbientMismatch)
HOPF_DECLARE_ERROR(ShapeMismatch)
HOPF_DECLARE_ERROR(InvalidGroupTable)
HOPF_DECLARE_ERROR(NotPrimitiveRoot)
HOPF_DECLARE_ERROR(NotBialgebra)
HOPF_DECLARE_ERROR(NoAntipode)
HOPF_DECLARE_ERROR(NotPrimitive)
HOPF_DECLARE_ERROR(NotSubcoalgebra)
HOPF_DECLARE_ERROR(NonSplitField)
HOPF_DECLARE_ERROR(LiftDivergence)
HOPF_DECLARE_ERROR(SaturationOverlap)
HOPF_DECLARE_ERROR(NotApplicable)
HOPF_DECLARE_ERROR(NotCoideal)
HOPF_DECLARE_ERROR(InvalidCoaction)
HOPF_DECLARE_ERROR(CoactionNotAlgebraMap)
HOPF_DECLARE_ERROR(NotCosemisimple)
HOPF_DECLARE_ERROR(ParseError)

#undef HOPF_DECLARE_ERROR

}  // namespace hopf
