#include "chardeg/data_path.hpp"

#include <cstdlib>

#ifndef CHARDEG_DATA_DIR
#define CHARDEG_DATA_DIR "data"
#endif

namespace chardeg {

std::string data_dir() {
  if (const char* env = std::getenv("CHARDEG_DATA_DIR")) {
    if (*env) return env;
  }
  return CHARDEG_DATA_DIR;
}

std::string data_file(const std::string& rel) { return data_dir() + "/" + rel; }

}  // namespace chardeg
