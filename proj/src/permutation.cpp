#include "symbreak/permutation.hpp"

#include "symbreak/errors.hpp"

#include <numeric>
#include <sstream>

namespace symbreak {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw input_error("permutation: image array is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int v = 0; v < degree(); ++v)
        if (images_[v] != v) return false;
    return true;
}

Permutation Permutation::then(const Permutation& other) const {
    if (degree() != other.degree()) throw input_error("permutation: degree mismatch");
    std::vector<int> im(images_.size());
    for (int v = 0; v < degree(); ++v) im[v] = other.images_[images_[v]];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int v = 0; v < degree(); ++v) im[images_[v]] = v;
    return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int v = 0; v < degree(); ++v) {
        if (seen[v]) continue;
        std::vector<int> cyc;
        int w = v;
        while (!seen[w]) {
            seen[w] = 1;
            cyc.push_back(w);
            w = images_[w];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<char> seen(images_.size(), 0);
    for (int v = 0; v < degree(); ++v) {
        if (seen[v]) continue;
        ++count;
        int w = v;
        while (!seen[w]) {
            seen[w] = 1;
            w = images_[w];
        }
    }
    return count;
}

int Permutation::motion() const {
    int moved = 0;
    for (int v = 0; v < degree(); ++v)
        if (images_[v] != v) ++moved;
    return moved;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream out;
    bool any = false;
    for (const auto& cyc : cycles()) {
        if (cyc.size() < 2) continue;
        any = true;
        out << '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) out << ' ';
            out << cyc[i];
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

} // namespace symbreak
