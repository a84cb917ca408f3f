#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeinlab/classical.hpp"
#include "skeinlab/diagram.hpp"
#include "skeinlab/poly_io.hpp"

namespace skeinlab {

struct MissingData : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TableValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LinkTableEntry {
  std::string name;
  std::string pd;
  std::string orientation_tag;
  std::optional<std::string> expected_jones;
  std::string provenance;
};

inline std::string data_dir() {
  if (const char* env = std::getenv("SKEINLAB_DATA")) return env;
#ifdef SKEINLAB_DATA_DIR
  return SKEINLAB_DATA_DIR;
#else
  return "data";
#endif
}

// Records are blank-line separated blocks of "key: value" lines; '#' starts
// a comment. Keys: name, pd, orientation, jones, provenance.
inline std::vector<LinkTableEntry> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingData("cannot open link table: " + path);
  std::vector<LinkTableEntry> entries;
  LinkTableEntry cur;
  bool open = false;
  auto flush = [&] {
    if (!open) return;
    if (cur.name.empty()) throw TableValidationError("record without a name in " + path);
    entries.push_back(cur);
    cur = {};
    open = false;
  };
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
      flush();
      continue;
    }
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw TableValidationError("bad line in " + path + ": " + line);
    std::string key = line.substr(0, colon);
    std::string val = line.substr(colon + 1);
    val.erase(0, val.find_first_not_of(" \t"));
    open = true;
    if (key == "name")
      cur.name = val;
    else if (key == "pd")
      cur.pd = val;
    else if (key == "orientation")
      cur.orientation_tag = val;
    else if (key == "jones")
      cur.expected_jones = val;
    else if (key == "provenance")
      cur.provenance = val;
    else
      throw TableValidationError("unknown key '" + key + "' in " + path);
  }
  flush();
  return entries;
}

// Load-time validation: every entry carrying an expected Jones value must
// reproduce it exactly from its own PD.
inline void validate_table(const std::vector<LinkTableEntry>& entries) {
  for (const auto& e : entries) {
    if (!e.expected_jones) continue;
    LaurentFraction got = jones(parse_pd(e.pd));
    LaurentFraction want = parse_fraction(*e.expected_jones);
    if (!(got == want))
      throw TableValidationError("entry '" + e.name + "': computed Jones " +
                                 to_string(got) + " != expected " +
                                 to_string(want));
  }
}

inline std::vector<LinkTableEntry> load_bundled_table() {
  auto entries = load_table(data_dir() + "/links.txt");
  validate_table(entries);
  return entries;
}

inline const LinkTableEntry* find_entry(const std::vector<LinkTableEntry>& t,
                                        const std::string& name) {
  for (const auto& e : t)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace skeinlab
