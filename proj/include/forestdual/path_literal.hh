#ifndef FORESTDUAL_PATH_LITERAL_HH
#define FORESTDUAL_PATH_LITERAL_HH 1

#include <forestdual/structure.hh>

#include <optional>
#include <string>
#include <string_view>

namespace forestdual
{
    /// Oriented path from a word over {+,-}: "p(++-)" or "++-". Symbol k joins
    /// v(k-1) and v(k), forward for +. A parenthesized group followed by ^n is
    /// repeated n times, so "++(+-+)^2++" is accepted. The empty word gives a
    /// single vertex. Throws InputError on anything else.
    auto parse_path_literal(std::string_view text) -> Structure;

    /// The word with groups expanded.
    auto expand_path_word(std::string_view text) -> std::string;

    /// The word of an oriented path, read from whichever end gives the
    /// lexicographically smaller word; absent for anything else.
    auto path_word_of(const Structure & s) -> std::optional<std::string>;

    /// Word of the path P_ij: ++ (+-+)^i ++-- (-+-)^j --.
    auto p_ij_word(int i, int j) -> std::string;

    /// Directed path with k arcs.
    auto directed_path(int k) -> Structure;

    /// Acyclic tournament on k vertices, arcs u -> v for u < v.
    auto transitive_tournament(int k) -> Structure;
}

#endif
