#pragma once

#include <stdexcept>
#include <string>

namespace k3dyn {

// Base class for every domain error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define K3DYN_ERROR(Name)                                                    \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what = #Name) : Error(what) {}      \
    }

K3DYN_ERROR(DivisionByZero);
K3DYN_ERROR(IncompatibleField);
K3DYN_ERROR(LatticeMismatch);
K3DYN_ERROR(DegenerateGenerators);
K3DYN_ERROR(IrreducibleCubic);
K3DYN_ERROR(RepeatedEigenvalueDefect);
K3DYN_ERROR(FieldMismatch);
K3DYN_ERROR(NoExpandingEigenvalue);
K3DYN_ERROR(NotHyperbolic);
K3DYN_ERROR(NotAmpleWitness);
K3DYN_ERROR(NotApplicable);
K3DYN_ERROR(NotEffectiveSample);
K3DYN_ERROR(AlphaNotExpanding);
K3DYN_ERROR(NotARoot);
K3DYN_ERROR(DegenerateFiber);
K3DYN_ERROR(PointNotOnSurface);
K3DYN_ERROR(WordMismatch);
K3DYN_ERROR(ParseError);

#undef K3DYN_ERROR

}  // namespace k3dyn
