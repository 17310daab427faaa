#ifndef FORESTDUAL_SIGNATURE_HH
#define FORESTDUAL_SIGNATURE_HH 1

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace forestdual
{
    struct Relation
    {
        std::string name;
        int arity;

        auto operator== (const Relation &) const -> bool = default;
    };

    /// An ordered list of relation symbols. The order fixes serialization
    /// order everywhere. Copies share the underlying list.
    class Signature
    {
        private:
            std::shared_ptr<const std::vector<Relation>> _relations;

        public:
            /// Throws InputError on duplicate names or arity < 1.
            explicit Signature(std::vector<Relation> relations);

            /// One binary relation "E".
            static auto digraph() -> Signature;

            auto size() const -> std::size_t { return _relations->size(); }
            auto operator[] (std::size_t i) const -> const Relation & { return (*_relations)[i]; }
            auto relations() const -> const std::vector<Relation> & { return *_relations; }
            auto arity(std::size_t i) const -> int { return (*_relations)[i].arity; }
            auto max_arity() const -> int;

            auto index_of(const std::string & name) const -> std::optional<std::size_t>;

            auto operator== (const Signature & other) const -> bool
            {
                return _relations == other._relations || *_relations == *other._relations;
            }
    };
}

#endif
