#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectra {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// Entry point of the `spectra` tool. `args` excludes the program name.
/// Returns 0 on success, 1 on validation failure or bad usage, 2 on I/O error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectra
