#pragma once

#include <stdexcept>
#include <string>

namespace p13 {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define P13_ERROR_KIND(NAME)                                            \
    struct NAME : Error {                                               \
        explicit NAME(const std::string& what) : Error(#NAME ": " + what) {} \
    }

P13_ERROR_KIND(DivisionByZero);
P13_ERROR_KIND(DegreeOverflow);
P13_ERROR_KIND(DimensionMismatch);
P13_ERROR_KIND(NotInverse);
P13_ERROR_KIND(NotClosed);
P13_ERROR_KIND(NotScalar);
P13_ERROR_KIND(NonCommuting);
P13_ERROR_KIND(UnknownRep);
P13_ERROR_KIND(SetMismatch);
P13_ERROR_KIND(SingularPoint);
P13_ERROR_KIND(DegenerateKernel);
P13_ERROR_KIND(UnknownKindTwist);
P13_ERROR_KIND(NoCandidate);

#undef P13_ERROR_KIND

// Global degree guards. Symbolic blowups fail loudly instead of hanging.
namespace limits {
inline int max_scalar_degree = 64;
inline int max_x_degree = 4;
}  // namespace limits

}  // namespace p13
