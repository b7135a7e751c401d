#pragma once

#include <cstddef>

#include "gext/exec.hpp"

namespace gext::detail {

// Runs fn(i) for i in [0, n). Each index must write only its own output slot
// and must not throw.
template <class Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn)
{
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            fn(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
    }
}

} // namespace gext::detail
