#pragma once

namespace gext {

// Selects the kernel variant. Serial is the reference implementation; the
// parallel variants must produce bit-identical results.
enum class Exec { Serial, Parallel };

} // namespace gext
