#pragma once

#include <stdexcept>
#include <string>

namespace hirzebruch {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HIRZEBRUCH_DEFINE_ERROR(Name)          \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

// cyclofield
HIRZEBRUCH_DEFINE_ERROR(OrderMismatch);
HIRZEBRUCH_DEFINE_ERROR(DivisionByZero);

// arrangement / catalog / io
HIRZEBRUCH_DEFINE_ERROR(CoincidentLines);
HIRZEBRUCH_DEFINE_ERROR(InvalidArrangement);
HIRZEBRUCH_DEFINE_ERROR(InvalidParameter);
HIRZEBRUCH_DEFINE_ERROR(UnknownName);
HIRZEBRUCH_DEFINE_ERROR(ParseError);

// metric feasibility
HIRZEBRUCH_DEFINE_ERROR(LengthMismatch);
HIRZEBRUCH_DEFINE_ERROR(InternalContradiction);

// hopf
HIRZEBRUCH_DEFINE_ERROR(ZeroDirection);
HIRZEBRUCH_DEFINE_ERROR(TooFewLines);
HIRZEBRUCH_DEFINE_ERROR(DuplicateLines);
HIRZEBRUCH_DEFINE_ERROR(DegenerateInput);
HIRZEBRUCH_DEFINE_ERROR(WrongCount);

// extendability
HIRZEBRUCH_DEFINE_ERROR(DegenerateTriangle);
HIRZEBRUCH_DEFINE_ERROR(InvalidParameters);
HIRZEBRUCH_DEFINE_ERROR(EmptySingularSet);

#undef HIRZEBRUCH_DEFINE_ERROR

}  // namespace hirzebruch
