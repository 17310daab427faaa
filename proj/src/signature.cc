#include <forestdual/signature.hh>
#include <forestdual/errors.hh>

#include <algorithm>
#include <set>

using std::optional;
using std::set;
using std::size_t;
using std::string;
using std::vector;

namespace forestdual
{
    Signature::Signature(vector<Relation> relations)
    {
        set<string> seen;
        for (auto & r : relations) {
            if (r.name.empty())
                throw InputError("relation symbol with empty name");
            if (r.arity < 1)
                throw InputError("relation '" + r.name + "' has arity < 1");
            if (! seen.insert(r.name).second)
                throw InputError("duplicate relation symbol '" + r.name + "'");
        }
        _relations = std::make_shared<const vector<Relation>>(std::move(relations));
    }

    auto Signature::digraph() -> Signature
    {
        static const Signature instance{vector<Relation>{{"E", 2}}};
        return instance;
    }

    auto Signature::max_arity() const -> int
    {
        int result = 0;
        for (auto & r : *_relations)
            result = std::max(result, r.arity);
        return result;
    }

    auto Signature::index_of(const string & name) const -> optional<size_t>
    {
        for (size_t i = 0 ; i < _relations->size() ; ++i)
            if ((*_relations)[i].name == name)
                return i;
        return std::nullopt;
    }
}
