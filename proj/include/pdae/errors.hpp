// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pdae {

/// Invalid argument or violated precondition, detected before any computation.
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested operation needs data the object does not carry
/// (exact solution, canonical data, unfilled grid nodes).
class unsupported_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A factorization hit a pivot below the singularity threshold.
class singular_error : public std::runtime_error {
public:
    singular_error(const std::string& msg, int pivot_index)
        : std::runtime_error(msg), pivot_index_(pivot_index) {}
    int pivot_index() const noexcept { return pivot_index_; }

private:
    int pivot_index_;
};

/// An iteration failed to converge or produced non-finite values.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pdae
