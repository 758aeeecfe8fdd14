#ifndef SYMBREAK_COLORING_HPP
#define SYMBREAK_COLORING_HPP

#include <vector>

namespace symbreak {

// Vertex coloring with color ids 1..palette, indexed by vertex.
struct Coloring {
    std::vector<int> colors;
    int palette = 0;

    Coloring() = default;
    Coloring(std::vector<int> colors, int palette);

    int size() const { return static_cast<int>(colors.size()); }
    int operator()(int v) const { return colors[v]; }

    // Number of distinct colors actually present.
    int used_colors() const;
};

} // namespace symbreak

#endif
