#include "mvmtsp/runtime.hpp"

#include <cstdlib>
#include <thread>

namespace mvmtsp {

int thread_cap() {
  if (const char* s = std::getenv("MVMTSP_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

}  // namespace mvmtsp
