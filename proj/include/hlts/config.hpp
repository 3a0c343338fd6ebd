#pragma once

namespace hlts {

/// Dimension cap for the exhaustive degree-5 identity sweeps (d^5 tuples).
/// Defaults to 8; the HLTS_DIM_CAP environment variable overrides it.
int dim_cap();

void require_within_dim_cap(int dim, const char* what);

}  // namespace hlts
