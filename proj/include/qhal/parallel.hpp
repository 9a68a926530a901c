#pragma once

namespace qhal {

/// Number of threads the OpenMP kernels may use.  Resolution order:
/// a programmatic cap set via set_thread_cap(), then the QHA_LAB_THREADS
/// environment variable, then the OpenMP default.  Always >= 1.
///
/// Kernels only ever parallelise over independent output elements (each
/// output's reduction runs sequentially in a fixed order), so results are
/// bitwise identical for every thread count.
int max_threads();

/// Overrides the thread cap at runtime (0 restores env/default behaviour).
void set_thread_cap(int cap);

}  // namespace qhal
