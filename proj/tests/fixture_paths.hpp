#pragma once

#include <cstdlib>
#include <string>

// Fixture tree location: NSALG_FIXTURES when set, the build-time default
// otherwise (tests are usually driven by ctest from the build directory).
inline std::string fixtures_dir() {
  if (const char* env = std::getenv("NSALG_FIXTURES")) return env;
#ifdef NSALG_FIXTURES_DIR
  return NSALG_FIXTURES_DIR;
#else
  return "fixtures";
#endif
}
