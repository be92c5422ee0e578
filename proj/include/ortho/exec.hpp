#pragma once

namespace ortho {

/// Selects between the OpenMP kernel and the serial reference loop it was
/// derived from. Both produce bit-identical results; the serial path is kept
/// for testing and benchmarking.
enum class Exec { serial, parallel };

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int parallel_threads();

}  // namespace ortho
