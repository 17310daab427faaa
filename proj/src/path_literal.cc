#include <forestdual/path_literal.hh>
#include <forestdual/errors.hh>

#include <algorithm>

using std::string;
using std::string_view;

namespace forestdual
{
    namespace
    {
        auto expand(string_view text, size_t & pos, bool nested) -> string
        {
            string word;
            while (pos < text.size()) {
                char c = text[pos];
                if (c == '+' || c == '-') {
                    word += c;
                    ++pos;
                }
                else if (text.substr(pos, 3) == "\xe2\x88\x92") {
                    word += '-';
                    pos += 3;
                }
                else if (c == ' ')
                    ++pos;
                else if (c == '(') {
                    ++pos;
                    string group = expand(text, pos, true);
                    if (pos >= text.size() || text[pos] != ')')
                        throw InputError("path literal: unbalanced parenthesis");
                    ++pos;
                    int times = 1;
                    if (pos < text.size() && text[pos] == '^') {
                        ++pos;
                        size_t start = pos;
                        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
                            ++pos;
                        if (start == pos || pos - start > 4)
                            throw InputError("path literal: bad exponent");
                        times = std::stoi(string(text.substr(start, pos - start)));
                    }
                    for (int k = 0 ; k < times ; ++k)
                        word += group;
                }
                else if (c == ')' && nested)
                    return word;
                else
                    throw InputError("path literal: illegal character '" + string(1, c) + "'");
            }
            if (nested)
                throw InputError("path literal: unbalanced parenthesis");
            return word;
        }
    }

    auto expand_path_word(string_view text) -> string
    {
        if (text.size() >= 3 && text.substr(0, 2) == "p(" && text.back() == ')')
            text = text.substr(2, text.size() - 3);
        size_t pos = 0;
        return expand(text, pos, false);
    }

    auto parse_path_literal(string_view text) -> Structure
    {
        string word = expand_path_word(text);
        int n = static_cast<int>(word.size());
        Structure s{Signature::digraph(), n + 1};
        for (int k = 1 ; k <= n ; ++k) {
            if (word[k - 1] == '+')
                s.add_tuple(0, Tuple{k - 1, k});
            else
                s.add_tuple(0, Tuple{k, k - 1});
        }
        return s;
    }

    auto path_word_of(const Structure & s) -> std::optional<string>
    {
        if (s.signature().size() != 1 || s.signature().arity(0) != 2 || ! is_tree(s))
            return std::nullopt;
        int n = s.vertex_count();
        std::vector<std::vector<std::pair<int, char>>> next(n);
        for (auto & t : s.tuples(0)) {
            next[t[0]].emplace_back(t[1], '+');
            next[t[1]].emplace_back(t[0], '-');
        }
        for (auto & adj : next)
            if (adj.size() > 2)
                return std::nullopt;

        auto walk = [&] (int start) {
            string word;
            int prev = -1, v = start;
            while (true) {
                auto it = std::find_if(next[v].begin(), next[v].end(), [&] (auto & e) { return e.first != prev; });
                if (it == next[v].end())
                    return word;
                word += it->second;
                prev = v;
                v = it->first;
            }
        };
        std::optional<string> best;
        for (int v = 0 ; v < n ; ++v)
            if (next[v].size() <= 1) {
                auto w = walk(v);
                if (! best || w < *best)
                    best = w;
            }
        return best;
    }

    auto p_ij_word(int i, int j) -> string
    {
        if (i < 0 || j < 0)
            throw InputError("P_ij needs nonnegative i and j");
        string w = "++";
        for (int k = 0 ; k < i ; ++k)
            w += "+-+";
        w += "++--";
        for (int k = 0 ; k < j ; ++k)
            w += "-+-";
        w += "--";
        return w;
    }

    auto directed_path(int k) -> Structure
    {
        return parse_path_literal(string(static_cast<size_t>(k), '+'));
    }

    auto transitive_tournament(int k) -> Structure
    {
        Structure s{Signature::digraph(), k};
        for (int u = 0 ; u < k ; ++u)
            for (int v = u + 1 ; v < k ; ++v)
                s.add_tuple(0, Tuple{u, v});
        return s;
    }
}
