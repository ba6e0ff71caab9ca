#include "mbd/runtime.hpp"

#include <cstdlib>

namespace mbd {

int env_worker_count() {
    const char* env = std::getenv("MBDOM_WORKERS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n > 0 ? n : 1;
}

} // namespace mbd
