#pragma once

#include <string>
#include <string_view>

#include "locham/pauli.hpp"

namespace locham::cli {

/// Builds a named instance from "family:key=value,...", e.g.
///   heisenberg:grid=4x4,periodic    heisenberg:cycle=4,periodic
///   heisenberg:triangular=4x3,periodic
///   signed-regular:n=20,r=4,seed=7  complete-zz:n=8
///   random:n=6,m=20,k=3,seed=1,coef=pm1
/// Throws std::invalid_argument on malformed specs.
Hamiltonian build_instance(std::string_view spec);

/// Text or JSON Hamiltonian; JSON is recognised by a leading '{'.
Hamiltonian read_hamiltonian(std::string_view text);

}  // namespace locham::cli
