#include "fte/manifest.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <variant>

namespace fte {

namespace {

using Value = std::variant<std::int64_t, std::string, std::vector<std::string>>;

struct Entry {
  Value value;
  std::size_t line;
};
using Table = std::map<std::string, Entry>;

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Removes a trailing comment outside string literals.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && quoted) {
      ++i;
    } else if (s[i] == '"') {
      quoted = !quoted;
    } else if (s[i] == '#' && !quoted) {
      return s.substr(0, i);
    }
  }
  return s;
}

class ValueParser {
 public:
  ValueParser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  Value parse() {
    skip_ws();
    Value v;
    if (peek() == '"') {
      v = string();
    } else if (peek() == '[') {
      v = array();
    } else {
      v = integer();
    }
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ManifestError(what, line_); }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  std::string string() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') {
        if (++pos_ == s_.size()) break;
        switch (s_[pos_]) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: fail("unknown escape sequence");
        }
      } else {
        out += s_[pos_];
      }
      ++pos_;
    }
    if (pos_ == s_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  std::vector<std::string> array() {
    ++pos_;
    std::vector<std::string> out;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return out;
    }
    for (;;) {
      skip_ws();
      if (peek() != '"') fail("arrays may only hold strings");
      out.push_back(string());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        skip_ws();
        if (peek() == ']') {
          ++pos_;
          return out;
        }
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        return out;
      }
      fail("expected ',' or ']' in array");
    }
  }

  std::int64_t integer() {
    auto rest = s_.substr(pos_);
    auto end = rest.find_first_of(" \t");
    auto token = rest.substr(0, end);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      fail("expected an integer, a string or an array of strings");
    }
    pos_ += token.size();
    return v;
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct Document {
  std::map<std::string, std::pair<Table, std::size_t>> tables;
  std::vector<std::pair<Table, std::size_t>> sequences;
};

Document parse_document(std::string_view text) {
  Document doc;
  Table* current = nullptr;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto s = trim(strip_comment(raw));
    if (s.empty()) continue;
    if (s.starts_with("[[")) {
      if (!s.ends_with("]]")) throw ManifestError("malformed array-table header", line);
      auto name = trim(s.substr(2, s.size() - 4));
      if (name != "sequence") throw ManifestError("unknown array table [[" + std::string(name) + "]]", line);
      doc.sequences.push_back({{}, line});
      current = &doc.sequences.back().first;
      continue;
    }
    if (s.starts_with("[")) {
      if (!s.ends_with("]")) throw ManifestError("malformed table header", line);
      std::string name(trim(s.substr(1, s.size() - 2)));
      static const std::set<std::string> known{"ring", "sampling", "known"};
      if (!known.contains(name)) throw ManifestError("unknown table [" + name + "]", line);
      if (doc.tables.contains(name)) throw ManifestError("duplicate table [" + name + "]", line);
      current = &doc.tables[name].first;
      doc.tables[name].second = line;
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string_view::npos) throw ManifestError("expected key = value", line);
    std::string key(trim(s.substr(0, eq)));
    if (key.empty()) throw ManifestError("empty key", line);
    if (current == nullptr) throw ManifestError("key '" + key + "' outside any table", line);
    if (current->contains(key)) throw ManifestError("duplicate key '" + key + "'", line);
    (*current)[key] = Entry{ValueParser(trim(s.substr(eq + 1)), line).parse(), line};
  }
  return doc;
}

void check_keys(const Table& table, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, entry] : table) {
    bool ok = false;
    for (const auto* a : allowed) ok = ok || key == a;
    if (!ok) throw ManifestError("unknown key '" + key + "' in " + where, entry.line);
  }
}

template <typename T>
const T* get(const Table& table, const std::string& key, const char* type_name) {
  auto it = table.find(key);
  if (it == table.end()) return nullptr;
  const auto* v = std::get_if<T>(&it->second.value);
  if (!v) throw ManifestError("'" + key + "' must be " + type_name, it->second.line);
  return v;
}

std::size_t line_of(const Table& table, const std::string& key, std::size_t fallback) {
  auto it = table.find(key);
  return it == table.end() ? fallback : it->second.line;
}

}  // namespace

ManifestError::ManifestError(const std::string& message, std::size_t line)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

RingPtr Manifest::polynomial_ring(const MonomialOrder& order) const { return PolyRing::make(p, vars, order); }

QuotientRing Manifest::quotient_ring(const MonomialOrder& order) const {
  auto ring = polynomial_ring(order);
  return QuotientRing(Ideal::parse(ring, relations));
}

std::vector<std::vector<Polynomial>> Manifest::parsed_sequences(const RingPtr& ring) const {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& seq : sequences) {
    std::vector<Polynomial> parsed;
    for (const auto& s : seq) parsed.push_back(parse_polynomial(s, ring));
    out.push_back(std::move(parsed));
  }
  return out;
}

Manifest parse_manifest(std::string_view text, std::string id) {
  auto doc = parse_document(text);
  Manifest m;
  m.id = std::move(id);

  auto ring_it = doc.tables.find("ring");
  if (ring_it == doc.tables.end()) throw ManifestError("missing [ring] table", 0);
  const auto& [ring, ring_line] = ring_it->second;
  check_keys(ring, {"p", "vars", "relations"}, "[ring]");
  const auto* p = get<std::int64_t>(ring, "p", "an integer");
  if (!p) throw ManifestError("[ring] needs p", ring_line);
  if (*p < 2 || *p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint32_t>(*p))) {
    throw ManifestError("p = " + std::to_string(*p) + " is not a prime below 2^31", line_of(ring, "p", ring_line));
  }
  m.p = static_cast<std::uint32_t>(*p);
  const auto* vars = get<std::vector<std::string>>(ring, "vars", "an array of strings");
  if (!vars || vars->empty()) throw ManifestError("[ring] needs a non-empty vars array", line_of(ring, "vars", ring_line));
  m.vars = *vars;
  if (const auto* rel = get<std::vector<std::string>>(ring, "relations", "an array of strings")) m.relations = *rel;

  RingPtr ambient;
  try {
    ambient = m.polynomial_ring();
  } catch (const std::exception& e) {
    throw ManifestError(e.what(), line_of(ring, "vars", ring_line));
  }
  auto check_polys = [&](const std::vector<std::string>& polys, std::size_t line) {
    for (const auto& s : polys) {
      try {
        (void)parse_polynomial(s, ambient);
      } catch (const ParseError& e) {
        throw ManifestError("cannot parse \"" + s + "\": " + e.what(), line);
      }
    }
  };
  check_polys(m.relations, line_of(ring, "relations", ring_line));

  for (const auto& [table, line] : doc.sequences) {
    check_keys(table, {"elements"}, "[[sequence]]");
    const auto* el = get<std::vector<std::string>>(table, "elements", "an array of strings");
    if (!el) throw ManifestError("[[sequence]] needs elements", line);
    check_polys(*el, line_of(table, "elements", line));
    m.sequences.push_back(*el);
  }

  if (auto it = doc.tables.find("sampling"); it != doc.tables.end()) {
    const auto& [table, line] = it->second;
    check_keys(table, {"count", "degree", "seed"}, "[sampling]");
    if (const auto* c = get<std::int64_t>(table, "count", "an integer")) {
      if (*c < 0) throw ManifestError("count must be non-negative", line_of(table, "count", line));
      m.sampling.count = static_cast<std::size_t>(*c);
    }
    if (const auto* d = get<std::int64_t>(table, "degree", "an integer")) {
      if (*d < 1 || *d > 64) throw ManifestError("degree must lie in 1..64", line_of(table, "degree", line));
      m.sampling.degree = static_cast<std::uint32_t>(*d);
    }
    if (const auto* s = get<std::int64_t>(table, "seed", "an integer")) {
      if (*s < 0) throw ManifestError("seed must be non-negative", line_of(table, "seed", line));
      m.sampling.seed = static_cast<std::uint64_t>(*s);
    }
  }

  if (auto it = doc.tables.find("known"); it != doc.tables.end()) {
    const auto& [table, line] = it->second;
    check_keys(table, {"hsl_top", "provenance"}, "[known]");
    if (const auto* h = get<std::int64_t>(table, "hsl_top", "an integer")) {
      if (*h < 0 || *h > 64) throw ManifestError("hsl_top must lie in 0..64", line_of(table, "hsl_top", line));
      m.hsl_top = static_cast<int>(*h);
    }
    if (const auto* pr = get<std::string>(table, "provenance", "a string")) m.provenance = *pr;
    if (m.hsl_top && trim(m.provenance).empty()) {
      throw ManifestError("hsl_top requires a provenance note", line_of(table, "hsl_top", line));
    }
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot open manifest " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path.stem().string());
}

}  // namespace fte
