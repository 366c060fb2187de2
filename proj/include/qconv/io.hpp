#pragma once

#include <filesystem>
#include <string>

#include "qconv/qsim.hpp"
#include "qconv/types.hpp"

namespace qconv::io {

// Sequence files are JSON arrays of [re, im] pairs; state files are
// {"num_qubits": n, "amplitudes": [[re, im], ...]}. Readers reject
// non-finite components; the state loader re-verifies unit norm.
// Writers emit 17 significant digits so values round-trip exactly.

Sequence parse_sequence(const std::string& text);
std::string format_sequence(const Sequence& s);

Sequence read_sequence(const std::filesystem::path& path);
void write_sequence(const std::filesystem::path& path, const Sequence& s);

qsim::QuantumState parse_state(const std::string& text);
std::string format_state(const qsim::QuantumState& s);

qsim::QuantumState read_state(const std::filesystem::path& path);
void write_state(const std::filesystem::path& path,
                 const qsim::QuantumState& s);

}  // namespace qconv::io
