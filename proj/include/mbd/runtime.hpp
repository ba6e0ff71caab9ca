#pragma once

namespace mbd {

/// Worker count from MBDOM_WORKERS (default 1). Used by the verification
/// harness and the fen solver's first-move fan-out.
int env_worker_count();

} // namespace mbd
