#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gext {

// A permutation of {0, ..., m-1} with its sign cached.
struct Permutation
{
    std::vector<int> image;
    int sign = 1;

    std::size_t size() const noexcept { return image.size(); }
    int operator[](std::size_t i) const noexcept { return image[i]; }
};

// Parity of the inversion count, as +1 / -1.
int inversion_sign(std::span<const int> image);

// All of S_m in lexicographic order. Tables are built once per m and shared;
// safe to call concurrently. m is capped at 10.
const std::vector<Permutation>& symmetric_group(std::size_t m);

} // namespace gext
