#ifndef SYMBREAK_PERMUTATION_HPP
#define SYMBREAK_PERMUTATION_HPP

#include <string>
#include <vector>

namespace symbreak {

// A bijection on 0..n-1 stored as its image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int v) const { return images_[v]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    // (a.then(b))(v) = b(a(v))
    Permutation then(const Permutation& other) const;
    Permutation inverse() const;

    std::vector<std::vector<int>> cycles() const; // includes fixed points

    // Number of cycles of the decomposition, fixed points included.
    int cycle_count() const;

    // Number of points moved.
    int motion() const;

    // "(0 3)(1 2)"; fixed points omitted, identity prints as "()".
    std::string to_cycle_string() const;

    auto operator<=>(const Permutation& other) const = default;

private:
    std::vector<int> images_;
};

} // namespace symbreak

#endif
