#include "implicitus/symbol.hpp"

#include <cctype>

namespace implicitus {

bool is_local_symbol(std::string_view value) {
  constexpr std::string_view prefix = "local";
  if (value.size() <= prefix.size() || value.substr(0, prefix.size()) != prefix) return false;
  for (char c : value.substr(prefix.size()))
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

namespace {

bool is_delimiter(char c) {
  return c == '/' || c == '.' || c == '#' || c == '(' || c == ')' || c == '[' || c == ']' || c == '`';
}

// Reads a plain or backquoted name starting at `pos`; returns false when the
// name is unterminated.
bool read_name(std::string_view s, size_t& pos, std::string& name) {
  if (pos < s.size() && s[pos] == '`') {
    size_t close = s.find('`', pos + 1);
    if (close == std::string_view::npos) return false;
    name.assign(s.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    return true;
  }
  size_t start = pos;
  while (pos < s.size() && !is_delimiter(s[pos])) ++pos;
  name.assign(s.substr(start, pos - start));
  return true;
}

}  // namespace

std::vector<Descriptor> parse_descriptors(std::string_view s) {
  std::vector<Descriptor> out;
  size_t pos = 0;
  auto bare_rest = [&](size_t from) {
    out.push_back({Descriptor::Kind::Bare, std::string(s.substr(from)), std::string(s.substr(from))});
    pos = s.size();
  };
  while (pos < s.size()) {
    size_t start = pos;
    char c = s[pos];
    if (c == '[' || c == '(') {
      char close = c == '[' ? ']' : ')';
      size_t end = s.find(close, pos + 1);
      if (end == std::string_view::npos) {
        bare_rest(start);
        break;
      }
      std::string name(s.substr(pos + 1, end - pos - 1));
      if (name.size() >= 2 && name.front() == '`' && name.back() == '`') name = name.substr(1, name.size() - 2);
      pos = end + 1;
      out.push_back({c == '[' ? Descriptor::Kind::TypeParameter : Descriptor::Kind::Parameter, std::move(name),
                     std::string(s.substr(start, pos - start))});
      continue;
    }
    std::string name;
    if (!read_name(s, pos, name)) {
      bare_rest(start);
      break;
    }
    if (pos >= s.size()) {
      out.push_back({Descriptor::Kind::Bare, name, std::string(s.substr(start))});
      break;
    }
    Descriptor::Kind kind;
    switch (s[pos]) {
      case '/': kind = Descriptor::Kind::Package; ++pos; break;
      case '.': kind = Descriptor::Kind::Term; ++pos; break;
      case '#': kind = Descriptor::Kind::Type; ++pos; break;
      case '(': {
        size_t end = s.find(')', pos);
        if (end == std::string_view::npos) {
          bare_rest(start);
          continue;
        }
        pos = end + 1;
        if (pos < s.size() && s[pos] == '.') ++pos;
        kind = Descriptor::Kind::Method;
        break;
      }
      case '[':
        // A type parameter directly after a name: treat the name as bare.
        kind = Descriptor::Kind::Bare;
        break;
      default:
        bare_rest(start);
        continue;
    }
    if (pos == start) {  // no progress; stray delimiter
      bare_rest(start);
      break;
    }
    out.push_back({kind, std::move(name), std::string(s.substr(start, pos - start))});
  }
  return out;
}

std::string owner_of(std::string_view symbol) {
  if (is_local_symbol(symbol)) return {};
  auto parts = parse_descriptors(symbol);
  if (parts.size() <= 1) return {};
  std::string owner;
  for (size_t i = 0; i + 1 < parts.size(); ++i) owner += parts[i].text;
  return owner;
}

std::string simple_name(std::string_view symbol) {
  auto parts = parse_descriptors(symbol);
  if (parts.empty()) return std::string(symbol);
  return parts.back().name;
}

}  // namespace implicitus
