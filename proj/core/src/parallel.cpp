#include "rml/parallel.hpp"

#include <cstdlib>
#include <string>

namespace rml {

namespace {
std::atomic<int> g_threads{0};
}

int default_threads()
{
    if (int t = g_threads.load(); t > 0)
        return t;
    if (const char* env = std::getenv("RML_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t > 0)
                return t;
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void set_default_threads(int threads) { g_threads = threads; }

} // namespace rml
