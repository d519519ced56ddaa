#include "grp/group_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace grp {

namespace {

std::string trim(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos)
    return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::vector<unsigned>> parse_cycles(unsigned line,
                                                const std::string &text) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw GroupFileError(line, "expected '(' in cycle notation");
    ++i;
    std::vector<unsigned> cycle;
    while (true) {
      while (i < text.size() &&
             std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      if (i >= text.size())
        throw GroupFileError(line, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw GroupFileError(line, "expected a point or ')' in a cycle");
      unsigned value = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + (text[i++] - '0');
      cycle.push_back(value);
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
  }
  return cycles;
}

} // namespace

GroupFile parse_group_file(const std::string &text) {
  GroupFile out;
  bool have_degree = false;
  std::istringstream in(text);
  std::string raw;
  unsigned lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty())
      continue;
    std::size_t space = line.find_first_of(" \t");
    std::string directive = line.substr(0, space);
    std::string rest =
        space == std::string::npos ? "" : trim(line.substr(space + 1));

    if (directive == "name") {
      if (rest.empty() || rest.find_first_of(" \t") != std::string::npos)
        throw GroupFileError(lineno, "name takes one identifier");
      out.name = rest;
    } else if (directive == "degree") {
      unsigned value = 0;
      for (char c : rest)
        if (std::isdigit(static_cast<unsigned char>(c)))
          value = value * 10 + (c - '0');
        else
          throw GroupFileError(lineno, "degree takes one integer");
      if (rest.empty() || value == 0)
        throw GroupFileError(lineno, "degree must be a positive integer");
      out.degree = value;
      have_degree = true;
    } else if (directive == "gen") {
      if (!have_degree)
        throw GroupFileError(lineno, "gen before degree");
      auto cycles = parse_cycles(lineno, rest);
      std::set<unsigned> used;
      for (const auto &cycle : cycles) {
        std::set<unsigned> in_cycle;
        for (unsigned point : cycle) {
          if (point < 1 || point > out.degree)
            throw GroupFileError(lineno, "point " + std::to_string(point) +
                                             " out of range 1.." +
                                             std::to_string(out.degree));
          if (!in_cycle.insert(point).second)
            throw GroupFileError(lineno, "duplicate point " +
                                             std::to_string(point) +
                                             " in a cycle");
          if (!used.insert(point).second)
            throw GroupFileError(lineno, "non-disjoint cycles at point " +
                                             std::to_string(point));
        }
      }
      out.generators.push_back(Perm::from_cycles(out.degree, cycles));
    } else {
      throw GroupFileError(lineno, "unknown directive '" + directive + "'");
    }
  }
  if (!have_degree)
    throw GroupFileError(lineno, "missing degree");
  return out;
}

std::string render_group_file(const GroupFile &f) {
  std::ostringstream out;
  if (!f.name.empty())
    out << "name " << f.name << "\n";
  out << "degree " << f.degree << "\n";
  for (const Perm &g : f.generators) {
    out << "gen";
    auto cycles = g.cycles();
    if (cycles.empty()) {
      out << " ()";
    } else {
      out << " ";
      for (const auto &cycle : cycles) {
        out << "(";
        for (std::size_t i = 0; i < cycle.size(); ++i)
          out << (i ? " " : "") << cycle[i];
        out << ")";
      }
    }
    out << "\n";
  }
  return out.str();
}

GroupFile load_group_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str());
}

} // namespace grp
