#include "hankel/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hankel {

std::size_t thread_count() {
    if (const char* env = std::getenv("HANKEL_LAB_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            // Unparseable: fall back to auto.
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace hankel
