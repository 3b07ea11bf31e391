#pragma once

#include <stdexcept>
#include <string>

namespace ordvec {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error
{
    public:
        explicit Error(const std::string& what) : std::runtime_error(what) {}
        /** Class name, e.g. "NotInterior"; the CLI prints it in front of what(). */
        virtual const char* kind() const noexcept { return "Error"; }
};

#define ORDVEC_DEFINE_ERROR(Name)                                              \
    class Name : public Error                                                  \
    {                                                                          \
        public:                                                                \
            explicit Name(const std::string& what = #Name) : Error(what) {}    \
            const char* kind() const noexcept override { return #Name; }       \
    }

/** Operands live in spaces of different dimension. */
ORDVEC_DEFINE_ERROR(DimensionMismatch);
/** Order interval [x, y] requested with x not below y. */
ORDVEC_DEFINE_ERROR(EmptyInterval);
/** Element required to be positive is not in the cone. */
ORDVEC_DEFINE_ERROR(NotPositive);
/** Element required to be a (norm) interior point of the cone is not. */
ORDVEC_DEFINE_ERROR(NotInterior);
/** Cone is not generating, so the induced order is not directed. */
ORDVEC_DEFINE_ERROR(NotDirected);
/** No functional is strictly positive on the cone. */
ORDVEC_DEFINE_ERROR(NoSuchFunctional);
/** Functional is not strictly positive on the cone generators. */
ORDVEC_DEFINE_ERROR(NotStrictlyPositive);
/** Double description requested above the configured dimension cap. */
ORDVEC_DEFINE_ERROR(DimensionCap);
/** Cone is not simplicial, so no orthant frame exists. */
ORDVEC_DEFINE_ERROR(ConeNotSimplicial);
/** Lexicographic construction needs at least two coordinates. */
ORDVEC_DEFINE_ERROR(DimensionTooSmall);
/** Harness asked for a property id that is not registered. */
ORDVEC_DEFINE_ERROR(UnknownProperty);
/** Malformed textual input (rationals, vectors, space files, configs). */
ORDVEC_DEFINE_ERROR(ParseError);
/** Argument outside an operation's precondition. */
ORDVEC_DEFINE_ERROR(InvalidArgument);

#undef ORDVEC_DEFINE_ERROR

/**
 * Raised when a checked consequence of a proven statement fails on a concrete
 * instance. Seeing one always means an implementation bug.
 */
class TheoremViolation : public std::logic_error
{
    public:
        explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

}   // namespace ordvec
