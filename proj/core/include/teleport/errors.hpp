// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace teleport {

/// Caller handed in something outside an operation's contract
/// (bad qubit index, dimension mismatch, probability outside [0,1], ...).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A state or outcome distribution is numerically too close to zero to
/// renormalize.
class DegenerateStateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Indicates a bug, not bad input.
class ContractError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace teleport
