#include <forestdual/canonical.hh>
#include <forestdual/errors.hh>

#include <algorithm>
#include <numeric>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace forestdual
{
    ForestView::ForestView(const Structure & s) :
        _structure(&s),
        _graph(incidence_graph(s)),
        _incidences(s.vertex_count())
    {
        if (! is_forest(s))
            throw NotAForest("ForestView");
        for (auto & e : _graph.edges)
            _incidences[e.vertex].push_back(Incidence{e.block, e.position});

        _component = component_ids(s);
        for (int v = 0 ; v < s.vertex_count() ; ++v) {
            if (_component[v] >= static_cast<int>(_component_vertices.size()))
                _component_vertices.emplace_back();
            _component_vertices[_component[v]].push_back(v);
        }
        _tree_codes.resize(_component_vertices.size());
        _canonical_roots.assign(_component_vertices.size(), -1);
    }

    auto ForestView::block_tuple(int b) const -> const Tuple &
    {
        auto & blk = _graph.blocks[b];
        return _structure->tuples(blk.relation)[blk.index];
    }

    auto ForestView::branch_code(int b, int position) const -> string
    {
        auto & t = block_tuple(b);
        string code = "R" + to_string(_graph.blocks[b].relation) + "." + to_string(position) + "[";
        for (int k = 0 ; k < static_cast<int>(t.size()) ; ++k)
            if (k != position) {
                code += rooted_code(t[k], b);
                code += ',';
            }
        code += ']';
        return code;
    }

    auto ForestView::rooted_code(int v, int parent_block) const -> const string &
    {
        auto key = std::make_pair(v, parent_block);
        if (auto it = _codes.find(key) ; it != _codes.end())
            return it->second;

        vector<string> branches;
        for (auto & inc : _incidences[v])
            if (inc.block != parent_block)
                branches.push_back(branch_code(inc.block, inc.position));
        std::sort(branches.begin(), branches.end());

        string code = "(";
        for (auto & b : branches)
            code += b;
        code += ')';
        return _codes.emplace(key, std::move(code)).first->second;
    }

    auto ForestView::sorted_branches(int v, int parent_block) const -> vector<Incidence>
    {
        vector<std::pair<string, Incidence>> keyed;
        for (auto & inc : _incidences[v])
            if (inc.block != parent_block)
                keyed.emplace_back(branch_code(inc.block, inc.position), inc);
        std::stable_sort(keyed.begin(), keyed.end(),
                [] (const auto & x, const auto & y) { return x.first < y.first; });
        vector<Incidence> result;
        result.reserve(keyed.size());
        for (auto & [_, inc] : keyed)
            result.push_back(inc);
        return result;
    }

    auto ForestView::compute_tree_code(int component) const -> void
    {
        if (_canonical_roots[component] != -1)
            return;
        for (int v : _component_vertices[component]) {
            auto & code = rooted_code(v);
            if (_canonical_roots[component] == -1 || code < _tree_codes[component]) {
                _tree_codes[component] = code;
                _canonical_roots[component] = v;
            }
        }
    }

    auto ForestView::tree_code(int component) const -> const string &
    {
        compute_tree_code(component);
        return _tree_codes[component];
    }

    auto ForestView::canonical_root(int component) const -> int
    {
        compute_tree_code(component);
        return _canonical_roots[component];
    }

    auto ForestView::sorted_components_except(int v) const -> vector<int>
    {
        vector<int> result;
        for (int c = 0 ; c < component_count() ; ++c)
            if (v < 0 || c != _component[v])
                result.push_back(c);
        std::stable_sort(result.begin(), result.end(),
                [&] (int x, int y) { return tree_code(x) < tree_code(y); });
        return result;
    }

    auto ForestView::sorted_components() const -> vector<int>
    {
        return sorted_components_except(-1);
    }

    auto forest_code(const Structure & forest) -> string
    {
        ForestView view(forest);
        string code = "F";
        for (int c : view.sorted_components()) {
            code += view.tree_code(c);
            code += ';';
        }
        return code;
    }

    auto rooted_forest_code(const RootedStructure & forest) -> string
    {
        ForestView view(forest.structure);
        string code = view.rooted_code(forest.root);
        code += '/';
        for (int c : view.sorted_components_except(forest.root)) {
            code += view.tree_code(c);
            code += ';';
        }
        return code;
    }

    namespace
    {
        auto emit(const ForestView & view, int v, int parent_block, vector<int> & ids, int & next, vector<vector<Tuple>> & out) -> void
        {
            ids[v] = next++;
            for (auto & inc : view.sorted_branches(v, parent_block)) {
                auto & t = view.block_tuple(inc.block);
                for (int k = 0 ; k < static_cast<int>(t.size()) ; ++k)
                    if (k != inc.position)
                        emit(view, t[k], inc.block, ids, next, out);
                Tuple u(t.size());
                for (size_t k = 0 ; k < t.size() ; ++k)
                    u[k] = ids[t[k]];
                out[view.block(inc.block).relation].push_back(std::move(u));
            }
        }

        auto canonical_forest(const Structure & s, int root) -> Structure
        {
            ForestView view(s);
            vector<int> ids(s.vertex_count(), -1);
            vector<vector<Tuple>> tuples(s.signature().size());
            int next = 0;
            if (root >= 0)
                emit(view, root, -1, ids, next, tuples);
            for (int c : view.sorted_components_except(root))
                emit(view, view.canonical_root(c), -1, ids, next, tuples);
            return Structure{s.signature(), s.vertex_count(), std::move(tuples)};
        }

        auto refined_colours(const Structure & s) -> vector<int>
        {
            int n = s.vertex_count();
            vector<int> colour(n, 0);
            int classes = 1;
            while (true) {
                using Entry = std::pair<std::pair<size_t, size_t>, vector<int>>;
                vector<std::pair<int, vector<Entry>>> sigs(n);
                for (int v = 0 ; v < n ; ++v)
                    sigs[v].first = colour[v];
                for (size_t r = 0 ; r < s.signature().size() ; ++r)
                    for (auto & t : s.tuples(r)) {
                        vector<int> cols(t.size());
                        for (size_t p = 0 ; p < t.size() ; ++p)
                            cols[p] = colour[t[p]];
                        for (size_t p = 0 ; p < t.size() ; ++p)
                            sigs[t[p]].second.emplace_back(std::make_pair(r, p), cols);
                    }
                for (auto & sg : sigs)
                    std::sort(sg.second.begin(), sg.second.end());

                auto distinct = sigs;
                std::sort(distinct.begin(), distinct.end());
                distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
                for (int v = 0 ; v < n ; ++v)
                    colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sigs[v]) - distinct.begin());
                if (static_cast<int>(distinct.size()) == classes)
                    break;
                classes = static_cast<int>(distinct.size());
            }
            return colour;
        }

        constexpr double permutation_limit = 4.0e6;

        auto canonical_general(const Structure & s) -> Structure
        {
            int n = s.vertex_count();
            auto colour = refined_colours(s);
            int classes = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
            vector<vector<int>> cells(classes);
            for (int v = 0 ; v < n ; ++v)
                cells[colour[v]].push_back(v);

            double count = 1;
            for (auto & c : cells)
                for (size_t k = 2 ; k <= c.size() ; ++k)
                    count *= static_cast<double>(k);
            if (count > permutation_limit)
                throw TooLarge("structure with " + to_string(n) + " vertices is too symmetric to canonicalize");

            vector<int> offset(classes, 0);
            for (int c = 1 ; c < classes ; ++c)
                offset[c] = offset[c - 1] + static_cast<int>(cells[c - 1].size());

            vector<int> label(n);
            vector<vector<Tuple>> best, current(s.signature().size());
            bool have_best = false;
            while (true) {
                for (int c = 0 ; c < classes ; ++c)
                    for (size_t k = 0 ; k < cells[c].size() ; ++k)
                        label[cells[c][k]] = offset[c] + static_cast<int>(k);
                for (size_t r = 0 ; r < s.signature().size() ; ++r) {
                    current[r].clear();
                    for (auto & t : s.tuples(r)) {
                        Tuple u(t.size());
                        for (size_t p = 0 ; p < t.size() ; ++p)
                            u[p] = label[t[p]];
                        current[r].push_back(std::move(u));
                    }
                    std::sort(current[r].begin(), current[r].end());
                }
                if (! have_best || current < best) {
                    best = current;
                    have_best = true;
                }

                int c = classes - 1;
                while (c >= 0 && ! std::next_permutation(cells[c].begin(), cells[c].end()))
                    --c;
                if (c < 0)
                    break;
            }
            return Structure{s.signature(), n, std::move(best)};
        }
    }

    auto canonical_form(const Structure & s) -> Structure
    {
        if (is_forest(s))
            return canonical_forest(s, -1);
        return canonical_general(s);
    }

    auto canonical_rooted_forest(const RootedStructure & forest) -> RootedStructure
    {
        return RootedStructure{canonical_forest(forest.structure, forest.root), 0};
    }

    auto isomorphic(const Structure & a, const Structure & b) -> bool
    {
        if (! (a.signature() == b.signature()) || a.vertex_count() != b.vertex_count())
            return false;
        for (size_t r = 0 ; r < a.signature().size() ; ++r)
            if (a.tuples(r).size() != b.tuples(r).size())
                return false;
        return canonical_form(a) == canonical_form(b);
    }

    auto compact_text(const Structure & s) -> string
    {
        string text = to_string(s.vertex_count());
        for (size_t r = 0 ; r < s.signature().size() ; ++r) {
            if (s.tuples(r).empty())
                continue;
            text += '|';
            text += s.signature()[r].name;
            text += ':';
            bool first = true;
            for (auto & t : s.tuples(r)) {
                if (! first)
                    text += ',';
                first = false;
                for (size_t p = 0 ; p < t.size() ; ++p) {
                    if (p)
                        text += '-';
                    text += to_string(t[p]);
                }
            }
        }
        return text;
    }
}
