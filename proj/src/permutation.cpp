#include "gext/permutation.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

#include "gext/errors.hpp"

namespace gext {

int inversion_sign(std::span<const int> image)
{
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j)
            if (image[i] > image[j])
                sign = -sign;
    return sign;
}

const std::vector<Permutation>& symmetric_group(std::size_t m)
{
    constexpr std::size_t kMax = 10;
    static std::array<std::vector<Permutation>, kMax + 1> tables;
    static std::array<std::once_flag, kMax + 1> built;
    if (m > kMax)
        throw CapacityError("permutation table", m, kMax);

    std::call_once(built[m], [m] {
        std::vector<int> image(m);
        std::iota(image.begin(), image.end(), 0);
        auto& table = tables[m];
        do {
            table.push_back(Permutation{image, inversion_sign(image)});
        } while (std::next_permutation(image.begin(), image.end()));
    });
    return tables[m];
}

} // namespace gext
