#include <cstdlib>
#include <cstring>

#include "tvho/kernels.hpp"

namespace tvho::kern {

namespace {

const Backend& resolve() {
  const char* env = std::getenv("TVHO_SIMD");
#if defined(__x86_64__)
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_backend;
  if (env != nullptr && std::strcmp(env, "avx2") == 0) return avx2_backend;
  if (__builtin_cpu_supports("avx2")) return avx2_backend;
#else
  (void)env;
#endif
  return scalar_backend;
}

}  // namespace

const Backend& active() {
  static const Backend& backend = resolve();
  return backend;
}

const char* active_name() { return active().name; }

}  // namespace tvho::kern
