#pragma once

#include <stdexcept>
#include <string>

#include "qclock/circuit.hpp"

namespace qclock {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses a circuit configuration document (JSON). Unknown keys are
// rejected with a ParseError naming the offending field; invariant
// violations surface as std::invalid_argument from validate_circuit.
Circuit parse_circuit(const std::string& document);

Circuit load_circuit(const std::string& path);

// Canonical JSON form of a circuit, inverse of parse_circuit for
// documents produced by this function.
std::string circuit_to_json(const Circuit& c);

}  // namespace qclock
