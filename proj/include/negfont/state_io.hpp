// state_io.hpp
// JSON state file format:
//
//   {"n_qubits": 3,
//    "amplitudes": [{"index": "000", "re": 0.707..., "im": 0.0}, ...]}
//
// Omitted indices are zero. Reading normalizes the amplitudes; the caller
// decides whether to warn based on PureState::was_renormalized().

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "negfont/state.hpp"

namespace negfont {

// Raised when the file itself cannot be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws StateError on malformed content or non-normalizable amplitudes.
PureState parse_state_json(const std::string& text, int max_qubits = kDefaultMaxQubits);
PureState read_state_file(const std::filesystem::path& path, int max_qubits = kDefaultMaxQubits);

// Exact zero amplitudes are omitted; numbers use 17 significant digits.
std::string format_state_json(const PureState& state);
void write_state_file(const PureState& state, const std::filesystem::path& path);

// Shortest form "%.17g" with a trailing ".0" for integral values so the
// token always reads as a floating-point number.
std::string format_double(double v);

}  // namespace negfont
