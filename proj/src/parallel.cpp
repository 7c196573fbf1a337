#include "trendnet/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace trendnet {

unsigned default_thread_count() {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TRENDNET_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return std::min(hw, static_cast<unsigned>(v));
        } catch (const std::exception&) {
        }
    }
    return hw;
}

}  // namespace trendnet
