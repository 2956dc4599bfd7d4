#pragma once

#include <stdexcept>
#include <string>

namespace aectk
{
    /// Base of every error the toolkit throws.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Two objects that must share a signature do not.
    class VocabularyMismatch : public Error
    {
    public:
        using Error::Error;
    };

    /// A value violates one of its type's invariants (non-total function, tuple out of range, ...).
    class InvariantViolation : public Error
    {
    public:
        using Error::Error;
    };

    /// An operation was called outside its precondition.
    class PreconditionFailed : public Error
    {
    public:
        using Error::Error;
    };

    /// Exhaustive enumeration would exceed the configured ceiling.
    class ResourceLimit : public Error
    {
    public:
        using Error::Error;
    };
}
