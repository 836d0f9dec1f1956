// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qd {

// All library failures carry a short machine-readable kind plus detail text.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

  private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace qd
