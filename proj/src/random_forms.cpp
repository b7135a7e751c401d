#include "gext/random_forms.hpp"

namespace gext {

Form random_form(const ComplexPtr& cx, std::size_t degree, Rng& rng, unsigned density_percent)
{
    Form f(cx, degree);
    const std::size_t cells = f.cells().size();
    for (std::size_t i = 0; i < cells; ++i)
        if (rng.chance(density_percent))
            f.set_coeff(i, rng.rational());
    return f;
}

} // namespace gext
