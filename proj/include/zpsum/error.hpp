// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#pragma once

#include <stdexcept>
#include <string>

namespace zpsum {

enum class Errc {
  invalid_argument = 1,
  not_prime,
  duplicate_element,
  invalid_dilation,
  size_limit,
  capability,
  out_of_range,
  invalid_parameters,
  invalid_family,
  internal_contract,
  diagnostics_only,
  io,
  parse,
};

const char* errc_name(Errc e) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zpsum
