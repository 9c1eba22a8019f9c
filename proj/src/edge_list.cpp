#include "mlsp/edge_list.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace mlsp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(ErrorCode code, std::size_t line, const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_node(std::string_view text, std::size_t line) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    fail(ErrorCode::kParseError, line, "invalid node id '" + std::string(text) + "'");
  }
  return value;
}

// Counts significant digits of a plain decimal (digits, optional point),
// or returns -1 if the text is not one.
int significant_digits(std::string_view text) {
  int digits = 0;
  int points = 0;
  bool leading = true;
  int trailing_zeros = 0;
  for (char c : text) {
    if (c == '.') {
      if (++points > 1) return -1;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
    if (leading && c == '0') continue;
    leading = false;
    ++digits;
    trailing_zeros = c == '0' ? trailing_zeros + 1 : 0;
  }
  if (text.empty() || text == ".") return -1;
  // Zeros after the last non-zero digit of a fraction carry no precision.
  return points ? digits - trailing_zeros : digits;
}

double parse_weight(std::string_view text, std::size_t line) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const int digits = significant_digits(body);
  if (digits < 0) fail(ErrorCode::kParseError, line, "invalid weight '" + std::string(text) + "'");
  if (digits > kMaxWeightDigits) {
    fail(ErrorCode::kParseError, line,
         "weight '" + std::string(text) + "' has more than 15 significant digits");
  }
  double value = 0.0;
  const char* first = text.data() + (text.front() == '+' ? 1 : 0);
  const auto [end, ec] = std::from_chars(first, text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    fail(ErrorCode::kParseError, line, "invalid weight '" + std::string(text) + "'");
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    fail(ErrorCode::kWeightOutOfRange, line, "weight " + std::string(text) + " outside [0, 1]");
  }
  return value;
}

}  // namespace

MultiLayeredNetwork read_edge_list(std::istream& in, const LoadOptions& options) {
  std::string raw;
  std::size_t line = 0;
  bool header_seen = false;
  NetworkBuilder builder(options.polarity);
  while (std::getline(in, raw)) {
    ++line;
    if (line == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
    const std::string_view text = trim(raw);
    if (!header_seen) {
      if (text.empty()) continue;
      if (text != kEdgeListHeader) {
        fail(ErrorCode::kParseError, line,
             "expected header '" + std::string(kEdgeListHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    if (text.empty()) continue;

    std::array<std::string_view, 4> fields;
    std::size_t count = 0;
    std::string_view rest = text;
    while (true) {
      const auto comma = rest.find(',');
      if (count == fields.size()) fail(ErrorCode::kParseError, line, "expected 4 fields");
      fields[count++] = trim(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (count != fields.size()) fail(ErrorCode::kParseError, line, "expected 4 fields");
    const auto [src, dst, layer, weight] = fields;

    if (src.empty() && dst.empty() && !layer.empty() && weight.empty()) {
      builder.layer_for_label(std::string(layer));
      continue;
    }
    if (!src.empty() && dst.empty() && layer.empty() && weight.empty()) {
      builder.add_node(NodeId{parse_node(src, line)});
      continue;
    }
    if (src.empty() || dst.empty() || layer.empty() || weight.empty()) {
      fail(ErrorCode::kParseError, line, "missing field");
    }
    LayeredEdge edge{NodeId{parse_node(src, line)}, NodeId{parse_node(dst, line)}, LayerId{},
                     parse_weight(weight, line)};
    try {
      edge.layer = builder.layer_for_label(std::string(layer));
      builder.add_edge(edge, options.on_duplicate);
    } catch (const Error& e) {
      fail(e.code(), line, e.what());
    }
  }
  if (!header_seen) throw Error(ErrorCode::kEmptyFile, "edge list is empty");
  try {
    return std::move(builder).seal();
  } catch (const Error& e) {
    throw Error(ErrorCode::kEmptyFile, std::string("edge list has no records: ") + e.what());
  }
}

MultiLayeredNetwork load_edge_list(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return read_edge_list(in, options);
}

std::string format_weight(double value) {
  std::array<char, 512> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                        std::chars_format::fixed);
  return std::string(buffer.data(), end);
}

void write_edge_list(const MultiLayeredNetwork& net, std::ostream& out) {
  out << kEdgeListHeader << '\n';
  for (std::uint32_t l = 0; l < net.layer_count(); ++l) {
    out << ",," << net.layer_label(LayerId{l}) << ",\n";
  }
  std::vector<char> touched(net.node_count(), 0);
  for (std::size_t p = 0; p < net.pair_count(); ++p) {
    touched[net.pair_src(p)] = touched[net.pair_dst(p)] = 1;
  }
  for (NodeIndex v = 0; v < net.node_count(); ++v) {
    if (!touched[v]) out << net.id_of(v).value << ",,,\n";
  }
  for (const LayeredEdge& e : net.edges()) {
    const std::string w = format_weight(e.weight);
    if (significant_digits(w) > kMaxWeightDigits) {
      throw Error(ErrorCode::kInconsistentInput,
                  "weight " + w + " cannot be written with 15 significant digits");
    }
    out << e.src.value << ',' << e.dst.value << ',' << net.layer_label(e.layer) << ',' << w << '\n';
  }
}

void save_edge_list(const MultiLayeredNetwork& net, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  write_edge_list(net, out);
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path.string() + "' failed");
}

NetworkSummary summarize(const MultiLayeredNetwork& net) {
  NetworkSummary s;
  s.nodes = net.node_count();
  s.edges = net.edge_count();
  s.pairs = net.pair_count();
  for (std::uint32_t l = 0; l < net.layer_count(); ++l) {
    s.layer_labels.push_back(net.layer_label(LayerId{l}));
  }
  s.layer_edges.assign(net.layer_edge_counts().begin(), net.layer_edge_counts().end());
  return s;
}

}  // namespace mlsp
