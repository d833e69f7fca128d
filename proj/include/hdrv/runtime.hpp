#pragma once

namespace hdrv {

// Caps the worker count for the OpenMP kernels. 0 means "use the OpenMP
// default". All kernels produce bit-identical output for any thread count.
void set_max_threads(int n);
int max_threads();

// Effective thread count the kernels will launch with.
int effective_threads();

} // namespace hdrv
