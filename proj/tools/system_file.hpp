#pragma once

// Line-oriented system description files:
//
//   # comment (anywhere; rest of line ignored)
//   modulus = 105            or    modulus = 4,3
//   n = 4
//   row = 70 27 5 26         exactly n rows, n entries each
//
// Over a product ring each entry lists one residue per factor, separated
// by '|' and aligned with the moduli list: row = 1|2 0|1. Out-of-range
// entries are reduced mod the matching modulus with a warning.

#include <iosfwd>
#include <string>
#include <vector>

#include <zqdyn/product.hpp>

namespace zqdyn::cli {

class SystemFileError : public std::runtime_error {
  public:
    SystemFileError(const std::string& msg, int line_);
    int line;  // 1-based; 0 when no line applies
};

struct SystemFile {
    RingSpec ring;
    std::size_t n;
    ProductSystem system;
    std::string source_path;
    std::vector<std::string> warnings;  // canonical-reduction notices
};

SystemFile parse_system_file(std::istream& in, const std::string& path_for_messages);
SystemFile load_system_file(const std::string& path);

}  // namespace zqdyn::cli
