#include "progressio/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "progressio/error.hpp"

namespace progressio::harness {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, std::string const& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

struct Stanza {
  std::size_t line = 0;
  std::optional<std::string> name;
  std::optional<std::pair<std::string, std::size_t>> expr;
  std::optional<std::size_t> degree;
  std::vector<std::pair<std::string, std::size_t>> gens;
  std::vector<std::string> tags;
};

CatalogEntry finish(Stanza& s) {
  if (!s.name) fail(s.line, "[group] stanza without a name");
  CatalogEntry e;
  e.name = *s.name;
  e.line = s.line;
  e.tags = std::move(s.tags);
  if (s.expr && (s.degree || !s.gens.empty())) {
    fail(s.line, "group '" + e.name + "' has both expr and explicit generators");
  }
  if (s.expr) {
    try {
      e.source = parse_group_expr(s.expr->first);
    } catch (ParseError const& err) {
      fail(s.expr->second, err.what());
    }
  } else if (s.degree) {
    GeneratorSource src;
    src.degree = *s.degree;
    for (auto const& [text, line] : s.gens) {
      try {
        src.generators.push_back(Permutation::from_cycles(src.degree, text));
      } catch (ParseError const& err) {
        fail(line, std::string("bad generator: ") + err.what());
      }
    }
    e.source = std::move(src);
  } else {
    fail(s.line, "group '" + e.name + "' needs expr or degree + gen lines");
  }
  return e;
}

}  // namespace

bool CatalogEntry::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> entries;
  std::set<std::string> names;
  std::optional<Stanza> current;

  auto close = [&] {
    if (!current) return;
    CatalogEntry e = finish(*current);
    if (!names.insert(e.name).second) fail(current->line, "duplicate group name '" + e.name + "'");
    entries.push_back(std::move(e));
    current.reset();
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;

    if (line.empty() || line.front() == '#') continue;
    if (line == "[group]") {
      close();
      current.emplace();
      current->line = line_no;
      continue;
    }
    if (line.front() == '[') fail(line_no, "unknown section " + std::string(line));

    auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    if (!current) fail(line_no, "entry outside a [group] stanza");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));

    if (key == "name") {
      if (current->name) fail(line_no, "name given twice");
      if (value.empty()) fail(line_no, "empty name");
      if (value.find_first_of(" ,\t") != std::string_view::npos)
        fail(line_no, "names may not contain spaces or commas");
      current->name = std::string(value);
    } else if (key == "expr") {
      if (current->expr) fail(line_no, "expr given twice");
      current->expr.emplace(std::string(value), line_no);
    } else if (key == "degree") {
      if (current->degree) fail(line_no, "degree given twice");
      std::size_t d = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        fail(line_no, "degree must be a non-negative integer");
      }
      current->degree = d;
    } else if (key == "gen") {
      current->gens.emplace_back(std::string(value), line_no);
    } else if (key == "tags") {
      std::size_t p = 0;
      while (p <= value.size()) {
        std::size_t c = value.find(',', p);
        if (c == std::string_view::npos) c = value.size();
        auto tag = trim(value.substr(p, c - p));
        if (!tag.empty()) current->tags.emplace_back(tag);
        p = c + 1;
      }
    } else {
      fail(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  close();
  return entries;
}

std::vector<CatalogEntry> load_catalog(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::string render_catalog(std::vector<CatalogEntry> const& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto const& e = entries[i];
    if (i) out += '\n';
    out += "[group]\nname = " + e.name + "\n";
    if (auto const* expr = std::get_if<GroupExpr>(&e.source)) {
      out += "expr = " + render(*expr) + "\n";
    } else {
      auto const& src = std::get<GeneratorSource>(e.source);
      out += "degree = " + std::to_string(src.degree) + "\n";
      for (auto const& g : src.generators) out += "gen = " + g.to_cycle_string() + "\n";
    }
    if (!e.tags.empty()) {
      out += "tags = ";
      for (std::size_t t = 0; t < e.tags.size(); ++t) {
        if (t) out += ", ";
        out += e.tags[t];
      }
      out += "\n";
    }
  }
  return out;
}

FiniteGroup build_entry(CatalogEntry const& entry, std::size_t cap) {
  if (auto const* expr = std::get_if<GroupExpr>(&entry.source)) return build(*expr, cap);
  auto const& src = std::get<GeneratorSource>(entry.source);
  return close_group(src.degree, src.generators, cap);
}

std::string describe_source(CatalogEntry const& entry) {
  if (auto const* expr = std::get_if<GroupExpr>(&entry.source)) return render(*expr);
  auto const& src = std::get<GeneratorSource>(entry.source);
  std::string out = "degree " + std::to_string(src.degree) + ":";
  for (auto const& g : src.generators) out += " " + g.to_cycle_string();
  return out;
}

}  // namespace progressio::harness
