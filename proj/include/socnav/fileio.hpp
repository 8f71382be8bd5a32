// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_FILEIO_HPP_
#define SOCNAV_FILEIO_HPP_

#include <stdexcept>
#include <string>

namespace socnav {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `contents` to a sibling temp file and renames it over `path`, so
/// readers never observe a partial file. IoError on failure.
void write_file_atomic(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace socnav

#endif  // SOCNAV_FILEIO_HPP_
