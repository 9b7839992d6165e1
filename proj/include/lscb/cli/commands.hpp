#pragma once

#include <ostream>

namespace lscb::cli {

inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitError = 1;

/// Entry point shared by the executable and the tests.
///   lscb solve FILE [options]
///   lscb gen N M SEED
///   lscb bench (--gen N M COUNT SEED | --dir DIR) [options]
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lscb::cli
