#include "steiner/text_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace steiner {

namespace {

struct DataLine {
  std::size_t offset;
  std::vector<long long> values;
};

std::vector<DataLine> data_lines(const std::string& text) {
  std::vector<DataLine> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::size_t i = pos;
    while (i < end && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    if (i < end && text[i] != '#') {
      DataLine line{pos, {}};
      while (i < end) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
          ++i;
          continue;
        }
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + end, value);
        if (ec != std::errc() || (ptr != text.data() + end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
          throw ParseError("expected an integer", i);
        line.values.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
      }
      lines.push_back(std::move(line));
    }
    pos = end + 1;
  }
  return lines;
}

std::size_t header_value(const std::vector<DataLine>& lines) {
  if (lines.empty()) throw ParseError("empty file", 0);
  if (lines[0].values.size() != 1) throw ParseError("header must hold a single integer", lines[0].offset);
  if (lines[0].values[0] < 0) throw ParseError("negative size", lines[0].offset);
  return static_cast<std::size_t>(lines[0].values[0]);
}

TripleSystem parse_sts(const std::string& text) {
  auto lines = data_lines(text);
  const std::size_t v = header_value(lines);
  std::vector<RawTriple> raw;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].values.size() != 3) throw ParseError("block line must hold 3 points", lines[i].offset);
    raw.push_back({lines[i].values[0], lines[i].values[1], lines[i].values[2]});
  }
  ValidationReport report = validate_sts(static_cast<long long>(v), raw);
  if (!report.valid) {
    const auto& w = report.violations.front();
    std::string detail;
    for (long long p : w.witness) detail += " " + std::to_string(p);
    throw ValidationError("invalid triple system: " + w.rule + detail);
  }
  std::vector<Block> blocks;
  blocks.reserve(raw.size());
  for (const auto& r : raw)
    blocks.push_back({static_cast<Element>(r[0]), static_cast<Element>(r[1]), static_cast<Element>(r[2])});
  return TripleSystem(v, std::move(blocks));
}

CayleyTable parse_table(const std::string& text) {
  auto lines = data_lines(text);
  const std::size_t m = header_value(lines);
  if (lines.size() != m + 1)
    throw ParseError("expected " + std::to_string(m) + " table rows, found " + std::to_string(lines.size() - 1),
                     lines.back().offset);
  std::vector<Element> cells;
  cells.reserve(m * m);
  for (std::size_t r = 1; r <= m; ++r) {
    if (lines[r].values.size() != m) throw ParseError("row must hold " + std::to_string(m) + " entries", lines[r].offset);
    for (long long e : lines[r].values) {
      if (e < 0 || e >= static_cast<long long>(m)) throw ValidationError("table entry out of range: " + std::to_string(e));
      cells.push_back(static_cast<Element>(e));
    }
  }
  return CayleyTable(m, std::move(cells));
}

bool has_identity_zero(const CayleyTable& t) {
  for (Element x = 0; x < t.order(); ++x)
    if (t(0, x) != x || t(x, 0) != x) return false;
  return true;
}

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

std::string to_string(FileKind kind) {
  switch (kind) {
    case FileKind::sts: return "sts";
    case FileKind::loop: return "loop";
    case FileKind::quasigroup: return "quasigroup";
  }
  return "?";
}

TripleSystem read_sts(std::istream& in) { return parse_sts(slurp(in)); }
CayleyTable read_table(std::istream& in) { return parse_table(slurp(in)); }
LoopTable read_loop(std::istream& in) { return LoopTable(read_table(in)); }
QuasigroupTable read_quasigroup(std::istream& in) { return QuasigroupTable(read_table(in)); }

std::string format_sts(const TripleSystem& s) {
  std::string out = std::to_string(s.points()) + "\n";
  for (const Block& b : s.blocks())
    out += std::to_string(b[0]) + " " + std::to_string(b[1]) + " " + std::to_string(b[2]) + "\n";
  return out;
}

std::string format_table(const CayleyTable& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (Element r = 0; r < t.order(); ++r) {
    for (Element c = 0; c < t.order(); ++c) {
      if (c) out += ' ';
      out += std::to_string(t(r, c));
    }
    out += '\n';
  }
  return out;
}

void write_sts(std::ostream& out, const TripleSystem& s) { out << format_sts(s); }
void write_table(std::ostream& out, const CayleyTable& t) { out << format_table(t); }

FileKind infer_kind(const std::string& text) {
  auto lines = data_lines(text);
  const std::size_t m = header_value(lines);
  bool square = lines.size() == m + 1 && m > 0;
  for (std::size_t i = 1; square && i < lines.size(); ++i) square = lines[i].values.size() == m;
  if (!square) return FileKind::sts;
  // A v=1 STS file ("1") never reaches here because it has no rows.
  std::vector<Element> cells;
  for (std::size_t i = 1; i < lines.size(); ++i)
    for (long long e : lines[i].values) {
      if (e < 0 || e >= static_cast<long long>(m)) return FileKind::quasigroup;
      cells.push_back(static_cast<Element>(e));
    }
  try {
    return has_identity_zero(CayleyTable(m, std::move(cells))) ? FileKind::loop : FileKind::quasigroup;
  } catch (const ValidationError&) {
    return FileKind::quasigroup;
  }
}

AnyStructure read_structure(const std::string& text, FileKind kind) {
  switch (kind) {
    case FileKind::sts: return parse_sts(text);
    case FileKind::loop: return LoopTable(parse_table(text));
    case FileKind::quasigroup: return QuasigroupTable(parse_table(text));
  }
  throw Error("unknown file kind");
}

AnyStructure read_structure(const std::string& text) { return read_structure(text, infer_kind(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return slurp(in);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("write failed: " + path);
}

AnyStructure load_structure(const std::string& path) { return read_structure(read_file(path)); }

AnyStructure load_structure(const std::string& path, FileKind kind) {
  return read_structure(read_file(path), kind);
}

}  // namespace steiner
