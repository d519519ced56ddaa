#ifndef GRP_GROUP_FILE_HPP
#define GRP_GROUP_FILE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "grp/perm.hpp"
#include "grp/perm_group.hpp"

namespace grp {

struct GroupFileError : std::runtime_error {
  unsigned line;

  GroupFileError(unsigned line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
};

/// Parsed form of the line-oriented group file format:
///   # comment
///   name <identifier>
///   degree <integer>
///   gen <disjoint cycles, 1-based>        (one line per generator)
struct GroupFile {
  std::string name;
  unsigned degree = 0;
  std::vector<Perm> generators;

  PermGroup group() const { return PermGroup(degree, generators); }
};

// throws GroupFileError with a 1-based line number on any grammar violation
GroupFile parse_group_file(const std::string &text);

// canonical rendering; parse_group_file(render_group_file(f)) == f
std::string render_group_file(const GroupFile &f);

// reads and parses a file; throws std::runtime_error if unreadable
GroupFile load_group_file(const std::string &path);

} // namespace grp

#endif
