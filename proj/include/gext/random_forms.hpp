#pragma once

#include <cstdint>
#include <random>

#include "gext/forms.hpp"

namespace gext {

// Seeded source with platform-independent draws (std distributions are
// implementation-defined, the engine output is not).
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }
    bool chance(unsigned percent) { return uniform(0, 99) < percent; }

    // Small nonzero rational p/q with |p| <= 6, 1 <= q <= 4.
    Rational rational()
    {
        std::int64_t p = uniform(1, 6) * (chance(50) ? 1 : -1);
        Rational q(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(uniform(1, 4))));
        q.canonicalize();
        return q;
    }

  private:
    std::mt19937_64 engine_;
};

// Each cell of the degree gets a random nonzero coefficient with the given
// probability.
Form random_form(const ComplexPtr& cx, std::size_t degree, Rng& rng, unsigned density_percent = 60);

} // namespace gext
