// state_io.hpp
// JSON state files. Pure states:   {"num_qubits": n, "amplitudes": [[re,im], ...]}
// Density matrices:                {"num_qubits": n, "matrix": [[[re,im], ...], ...]}
//
// Malformed files throw StateParseError; files that parse but violate state
// invariants throw whatever the state constructors throw.

#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "qmono/density_matrix.hpp"
#include "qmono/pure_state.hpp"

namespace qmono {

struct StateParseError : std::runtime_error {
    explicit StateParseError(const std::string& msg) : std::runtime_error(msg) {}
};

using StateVariant = std::variant<PureState, DensityMatrix>;

std::string to_json_string(const PureState& psi);
std::string to_json_string(const DensityMatrix& rho);

StateVariant state_from_json_string(const std::string& text);

void write_state_file(const std::string& path, const PureState& psi);
void write_state_file(const std::string& path, const DensityMatrix& rho);
StateVariant read_state_file(const std::string& path);

}  // namespace qmono
