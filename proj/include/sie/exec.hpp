#pragma once

namespace sie {

/// Execution policy for kernels that have both a serial and an OpenMP path.
/// Auto picks the parallel path for large inputs when OpenMP is available.
enum class Exec { Auto, Serial, Parallel };

}  // namespace sie
