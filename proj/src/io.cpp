#include "dibrush/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "dibrush/error.hpp"

namespace dibrush {

namespace {

// Splits a line (comment already stripped) into whitespace-separated
// integers. Returns false on any non-integer token.
bool read_ints(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Arc> arcs;
  std::vector<long long> nums;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!read_ints(line, nums)) throw ParseError(line_no, "expected integers");
    if (nums.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (nums.size() != 2) throw ParseError(line_no, "expected exactly two integers");

    if (!have_header) {
      n = nums[0];
      m = nums[1];
      if (n < 0 || m < 0) throw ParseError(line_no, "negative vertex or arc count");
      have_header = true;
    } else {
      if (static_cast<long long>(arcs.size()) == m) {
        throw ParseError(line_no, "more arc lines than the declared " + std::to_string(m));
      }
      const long long u = nums[0];
      const long long v = nums[1];
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw IndexOutOfRange("line " + std::to_string(line_no) + ": arc (" + std::to_string(u) +
                              ", " + std::to_string(v) + ") with n = " + std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
      arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing \"n m\" header");
  if (static_cast<long long>(arcs.size()) != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " arcs, found " +
                                  std::to_string(arcs.size()));
  }
  std::vector<Arc> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw ParseError(line_no, "duplicate arc (" + std::to_string(dup->tail) + ", " +
                                  std::to_string(dup->head) + ")");
  }
  return Digraph(static_cast<int>(n), std::move(arcs));
}

std::string serialize_edge_list(const Digraph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Arc& a : g.arcs()) {
    out += std::to_string(a.tail);
    out += ' ';
    out += std::to_string(a.head);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IOError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IOError", "cannot write " + path);
  out << text;
}

Digraph read_edge_list_file(const std::string& path) { return parse_edge_list(read_text_file(path)); }

std::string export_dot(const Digraph& g, const TraceStep* step) {
  std::vector<bool> clean(g.order(), false);
  if (step) {
    for (Vertex v : step->clean_vertices) clean[v] = true;
  }
  std::ostringstream out;
  out << "digraph G {\n";
  out << "  node [shape=circle, fontname=\"Helvetica\", fontsize=10];\n";
  if (step) out << "  label=\"t=" << step->t << "\";\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (step && step->brushes[v] > 0) out << "\\n" << step->brushes[v];
    out << "\"";
    if (step) {
      if (clean[v]) {
        out << ", style=solid, fillcolor=white, fontcolor=black";
      } else {
        out << ", style=filled, fillcolor=black, fontcolor=white";
      }
    }
    out << "];\n";
  }
  for (const Arc& a : g.arcs()) {
    out << "  " << a.tail << " -> " << a.head;
    if (step) out << (clean[a.tail] ? " [style=dashed]" : " [style=bold]");
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dibrush
