#ifndef FORESTDUAL_REPORT_HH
#define FORESTDUAL_REPORT_HH 1

#include <forestdual/homomorphism.hh>

#include <optional>
#include <string>
#include <vector>

namespace forestdual
{
    /// One structure on which a check failed, with replayable witnesses.
    struct Failure
    {
        Structure structure;
        std::string direction;
        /// A member of the family mapping to structure, when there is one.
        std::optional<Structure> obstruction;
        std::optional<VertexMap> obstruction_hom;
        /// A dual receiving structure, when there is one.
        int dual_index = -1;
        std::optional<VertexMap> dual_hom;
        std::string note;
    };

    struct VerificationReport
    {
        int bound = 0;
        int checked = 0;
        std::string method;
        std::vector<Failure> failures;

        auto passed() const -> bool { return failures.empty(); }
    };
}

#endif
