#pragma once

#include <cstddef>

namespace lya {

// Process-wide caps. Defaults are conservative; the CLI can raise them.
std::size_t max_tensor_entries();
void set_max_tensor_entries(std::size_t n);
int max_level();
void set_max_level(int level);

// Throws ResourceCapExceeded if `entries` exceeds the tensor cap.
void check_tensor_size(std::size_t entries, const char* what);

}  // namespace lya
