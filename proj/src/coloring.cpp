#include "symbreak/coloring.hpp"

#include "symbreak/errors.hpp"

#include <algorithm>
#include <string>

namespace symbreak {

Coloring::Coloring(std::vector<int> colors, int palette)
    : colors(std::move(colors)), palette(palette) {
    if (palette < 0) throw input_error("coloring: negative palette");
    for (int c : this->colors)
        if (c < 1 || c > palette)
            throw input_error("coloring: color " + std::to_string(c) + " outside 1.." +
                              std::to_string(palette));
}

int Coloring::used_colors() const {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return static_cast<int>(sorted.size());
}

} // namespace symbreak
