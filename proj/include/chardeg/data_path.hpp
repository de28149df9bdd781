#pragma once
#include <string>

namespace chardeg {

// Directory holding the bundled tables and ledgers.  Compile-time default
// (CHARDEG_DATA_DIR) points at the source tree; the environment variable of
// the same name overrides it for installed/relocated use.
std::string data_dir();
std::string data_file(const std::string& rel);

}  // namespace chardeg
