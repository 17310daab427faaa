#ifndef FORESTDUAL_ERRORS_HH
#define FORESTDUAL_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace forestdual
{
    /// Malformed or inconsistent input: bad JSON, out-of-range vertex ids,
    /// arity mismatches, mismatched signatures.
    class InputError : public std::runtime_error
    {
        public:
            explicit InputError(const std::string & what) : std::runtime_error(what) { }
    };

    class SignatureMismatch : public InputError
    {
        public:
            SignatureMismatch() : InputError("structures or algebras have different signatures") { }
    };

    class NotAForest : public InputError
    {
        public:
            explicit NotAForest(const std::string & where) : InputError(where + ": input is not a forest") { }
    };

    /// The family handed to a tree-dual construction contains a non-tree.
    class NotATreeFamily : public InputError
    {
        public:
            NotATreeFamily() : InputError("family contains a member that is not a tree") { }
    };

    /// Dual constructions cannot handle families containing the empty structure:
    /// the empty forest has no component to cover.
    class EmptyStructureMember : public InputError
    {
        public:
            EmptyStructureMember() : InputError("family contains the empty structure") { }
    };

    /// A forest algebra whose tables violate the required axioms.
    class IncoherentAlgebra : public InputError
    {
        public:
            explicit IncoherentAlgebra(const std::string & what) : InputError("incoherent algebra: " + what) { }
    };

    /// A computation that would exceed the desk-scale limits.
    class TooLarge : public std::runtime_error
    {
        public:
            explicit TooLarge(const std::string & what) : std::runtime_error(what) { }
    };
}

#endif
