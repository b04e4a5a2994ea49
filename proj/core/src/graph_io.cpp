#include "mban/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

#include <json.hpp>

#include "mban/errors.hpp"

namespace mban {
namespace {

constexpr std::string_view kGraphFormatTag = "mban-graph-v1";
constexpr std::uint64_t kMaxParsedNodes = 1U << 16;

std::string location(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

// Tokenizer shared by the DOT and edge-list readers.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#' || (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  void skip_identifier() {
    skip_space();
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool accept(std::string_view literal) {
    skip_space();
    if (text_.substr(pos_, literal.size()) == literal) {
      pos_ += literal.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view literal) {
    if (!accept(literal)) fail("expected '" + std::string(literal) + "'");
  }

  std::uint64_t integer() {
    skip_space();
    std::uint64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("graph: " + message + " at " + location(text_, pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Digraph build_checked(std::uint64_t n, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& arcs,
                      const Lexer* lex) {
  auto reject = [&](const std::string& msg) {
    if (lex != nullptr) lex->fail(msg);
    throw ParseError("graph: " + msg);
  };
  if (n == 0) reject("graph must have at least one node");
  if (n > kMaxParsedNodes) reject("node count " + std::to_string(n) + " is too large");
  Digraph g(static_cast<std::size_t>(n));
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) {
      reject("arc [" + std::to_string(u) + "," + std::to_string(v) + "] has an endpoint >= n = " +
             std::to_string(n));
    }
    g.add_arc(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  return g;
}

Digraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("graph: invalid JSON at " + location(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                     e.what());
  }
  if (!doc.is_object()) throw ParseError("graph: top-level JSON value must be an object");
  if (!doc.contains("format") || doc["format"] != kGraphFormatTag) {
    throw ParseError("graph: missing or unsupported \"format\" (expected \"mban-graph-v1\")");
  }
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw ParseError("graph: \"n\" must be a non-negative integer");
  }
  if (!doc.contains("arcs") || !doc["arcs"].is_array()) {
    throw ParseError("graph: \"arcs\" must be an array");
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> arcs;
  std::size_t index = 0;
  for (const auto& a : doc["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_unsigned() || !a[1].is_number_unsigned()) {
      throw ParseError("graph: arcs[" + std::to_string(index) + "] must be a pair of node ids");
    }
    arcs.emplace_back(a[0].get<std::uint64_t>(), a[1].get<std::uint64_t>());
    ++index;
  }
  return build_checked(doc["n"].get<std::uint64_t>(), arcs, nullptr);
}

Digraph parse_dot(std::string_view text) {
  Lexer lex(text);
  lex.expect("digraph");
  lex.skip_identifier();  // optional graph name
  lex.expect("{");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> arcs;
  std::uint64_t n = 0;
  while (!lex.accept("}")) {
    if (lex.at_end()) lex.fail("unterminated digraph body");
    const std::uint64_t u = lex.integer();
    n = std::max(n, u + 1);
    if (lex.accept("->")) {
      const std::uint64_t v = lex.integer();
      n = std::max(n, v + 1);
      arcs.emplace_back(u, v);
    }
    lex.expect(";");
  }
  if (!lex.at_end()) lex.fail("trailing content after digraph body");
  return build_checked(n, arcs, &lex);
}

Digraph parse_edges(std::string_view text) {
  Lexer lex(text);
  const std::uint64_t n = lex.integer();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> arcs;
  while (!lex.at_end()) {
    const std::uint64_t u = lex.integer();
    if (!lex.peek_digit()) lex.fail("arc is missing its head");
    const std::uint64_t v = lex.integer();
    arcs.emplace_back(u, v);
  }
  return build_checked(n, arcs, &lex);
}

}  // namespace

std::optional<GraphFormat> graph_format_from_name(std::string_view name) {
  if (name == "json") return GraphFormat::Json;
  if (name == "dot") return GraphFormat::Dot;
  if (name == "edges") return GraphFormat::Edges;
  return std::nullopt;
}

std::string_view graph_format_name(GraphFormat format) {
  switch (format) {
    case GraphFormat::Json:
      return "json";
    case GraphFormat::Dot:
      return "dot";
    case GraphFormat::Edges:
      return "edges";
  }
  return "json";
}

std::string format_graph(const Digraph& g, GraphFormat format) {
  const auto arcs = g.arcs();
  switch (format) {
    case GraphFormat::Json: {
      nlohmann::ordered_json doc;
      doc["format"] = kGraphFormatTag;
      doc["n"] = g.size();
      doc["arcs"] = nlohmann::ordered_json::array();
      for (const auto& a : arcs) doc["arcs"].push_back({a.from, a.to});
      return doc.dump() + "\n";
    }
    case GraphFormat::Dot: {
      std::string out = "digraph {\n";
      std::vector<bool> touched(g.size(), false);
      for (const auto& a : arcs) {
        out += "  " + std::to_string(a.from) + " -> " + std::to_string(a.to) + ";\n";
        touched[a.from] = touched[a.to] = true;
      }
      for (NodeId v = 0; v < g.size(); ++v) {
        if (!touched[v]) out += "  " + std::to_string(v) + ";\n";
      }
      out += "}\n";
      return out;
    }
    case GraphFormat::Edges: {
      std::string out = std::to_string(g.size()) + "\n";
      for (const auto& a : arcs) out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
      return out;
    }
  }
  return {};
}

Digraph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::Json:
      return parse_json(text);
    case GraphFormat::Dot:
      return parse_dot(text);
    case GraphFormat::Edges:
      return parse_edges(text);
  }
  throw ParseError("graph: unknown format");
}

Digraph parse_graph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw ParseError("graph: empty input");
  if (text[i] == '{') return parse_json(text);
  if (text.substr(i, 7) == "digraph") return parse_dot(text);
  return parse_edges(text);
}

}  // namespace mban
