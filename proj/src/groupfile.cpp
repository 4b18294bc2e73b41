#include "fuskit/groupfile.hpp"

#include <fstream>
#include <sstream>

#include "fuskit/catalog.hpp"
#include "fuskit/errors.hpp"

namespace fuskit {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

GroupSource read_group_stream(std::istream& in, const std::string& label) {
  std::string line, name = label, gens_text;
  int degree = -1;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw parse_error("group file line without 'key: value': " + line);
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "degree") {
      try {
        degree = std::stoi(value);
      } catch (...) {
        throw parse_error("invalid degree: " + value);
      }
    } else if (key == "gens") {
      gens_text = value;
    } else if (key == "name") {
      name = value;
    } else {
      throw parse_error("unknown group file key: " + key);
    }
  }
  if (degree < 1) throw parse_error("group file must set degree");
  std::vector<Perm> gens;
  std::stringstream ss(gens_text);
  std::string piece;
  while (std::getline(ss, piece, ';')) {
    piece = trim(piece);
    if (!piece.empty()) gens.push_back(parse_cycles(piece, degree));
  }
  return GroupSource{name, group_from_generators(std::move(gens), degree)};
}

GroupSource read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read group file: " + path);
  return read_group_stream(in, path);
}

GroupSource parse_group_source(const std::string& source) {
  if (source.rfind("name:", 0) == 0) {
    std::string spec = source.substr(5);
    return GroupSource{spec, make_named_group(spec)};
  }
  return read_group_file(source);
}

}  // namespace fuskit
