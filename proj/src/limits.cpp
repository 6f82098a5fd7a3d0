#include "lya/limits.hpp"

#include "lya/errors.hpp"

#include <atomic>
#include <string>

namespace lya {

namespace {
std::atomic<std::size_t> g_max_entries{1'000'000};
std::atomic<int> g_max_level{3};
}  // namespace

std::size_t max_tensor_entries() { return g_max_entries.load(); }
void set_max_tensor_entries(std::size_t n) { g_max_entries.store(n); }
int max_level() { return g_max_level.load(); }
void set_max_level(int level) { g_max_level.store(level); }

void check_tensor_size(std::size_t entries, const char* what)
{
    if (entries > max_tensor_entries())
        throw ResourceCapExceeded(std::string(what) + " needs " + std::to_string(entries) +
                                  " tensor entries, cap is " + std::to_string(max_tensor_entries()) +
                                  " (raise with --max-tensor-entries)");
}

}  // namespace lya
