#include <fstream>
#include <sstream>

#include "diffu/gf2m.hpp"

namespace diffu {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::map<unsigned, std::uint32_t> parse_modulus_table(std::string_view text) {
  std::map<unsigned, std::uint32_t> table;
  int lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    const auto bad = [&] {
      return FieldError("modulus table line " + std::to_string(lineno) + ": expected 'm: 0xHEX'");
    };
    if (colon == std::string_view::npos) throw bad();
    unsigned m = 0;
    const auto key = trim(line.substr(0, colon));
    for (char c : key) {
      if (c < '0' || c > '9') throw bad();
      m = m * 10 + static_cast<unsigned>(c - '0');
    }
    const auto value = parse_hex(trim(line.substr(colon + 1)));
    if (key.empty() || !value || *value > 0xFFFFFFFFu) throw bad();
    // Field::make rejects bad degrees and reducible moduli.
    Field::make(m, static_cast<std::uint32_t>(*value));
    table[m] = static_cast<std::uint32_t>(*value);
  }
  return table;
}

std::map<unsigned, std::uint32_t> load_modulus_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FieldError("cannot open modulus table " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_modulus_table(ss.str());
}

std::string default_modulus_table_path() { return DIFFU_DEFAULT_MODULI_FILE; }

}  // namespace diffu
