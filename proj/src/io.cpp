#include "sigfrust/io.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sigfrust/error.hpp"

namespace sigfrust {

namespace {

using Tokens = std::vector<std::string_view>;

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

Tokens split(std::string_view line, std::string_view seps = " \t") {
  Tokens out;
  std::size_t i = 0;
  while (i < line.size()) {
    i = line.find_first_not_of(seps, i);
    if (i == std::string_view::npos) break;
    std::size_t j = line.find_first_of(seps, i);
    if (j == std::string_view::npos) j = line.size();
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    fn(line_no, strip_comment(line));
  }
}

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::size_t index_token(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  if (!parse_uint(tok, v)) throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  return static_cast<std::size_t>(v);
}

std::string join(const std::vector<std::size_t>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string opt_num(const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string{}; }

std::string fixed_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

std::string_view witness_kind_name(WitnessKind k) { return k == WitnessKind::kEdges ? "edges" : "vertices"; }

nlohmann::json report_json(const TheoremReport& r) {
  nlohmann::json j;
  j["theorem"] = r.theorem;
  j["instance"] = r.instance;
  j["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr);
  j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
  j["relation"] = r.relation == Relation::kAtMost ? "at_most" : "equals";
  j["claim"] = r.claim;
  j["computed"] = r.computed;
  j["verdict"] = std::string(to_string(r.verdict));
  j["sampled"] = r.sampled;
  j["witness"] = r.witness;
  nlohmann::json details = nlohmann::json::object();
  for (const auto& [key, value] : r.details) details[key] = value;
  j["details"] = details;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

SignedGraph parse_signed_graph(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t last_line = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> negatives;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    last_line = line_no;
    Tokens t = split(line);
    if (t.empty()) return;
    if (!have_header) {
      if (t.size() != 3 || t[0] != "sg") throw ParseError(line_no, "expected header 'sg <n> <m>'");
      n = index_token(t[1], line_no, "vertex count");
      m = index_token(t[2], line_no, "edge count");
      have_header = true;
      return;
    }
    if (t[0] != "e") throw ParseError(line_no, "expected edge line 'e <u> <v> <+|->'");
    if (t.size() != 4) throw ParseError(line_no, "edge line needs exactly 3 fields");
    if (edges.size() == m) throw ParseError(line_no, "more edge lines than the header's " + std::to_string(m));
    std::size_t u = index_token(t[1], line_no, "vertex index");
    std::size_t v = index_token(t[2], line_no, "vertex index");
    if (u >= n || v >= n) throw ParseError(line_no, "vertex index out of range");
    if (t[3] != "+" && t[3] != "-") throw ParseError(line_no, "sign must be '+' or '-'");
    if (t[3] == "-") negatives.push_back(edges.size());
    edges.push_back({u, v});
  });
  if (!have_header) throw ParseError(std::max<std::size_t>(last_line, 1), "missing 'sg <n> <m>' header");
  if (edges.size() != m)
    throw ParseError(last_line, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  auto g = make_graph(n, std::move(edges));
  return SignedGraph(g, Signature(m, std::span<const std::size_t>(negatives)));
}

std::string serialize_signed_graph(const SignedGraph& sg) {
  const Graph& g = sg.graph();
  std::string out = "sg " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out += "e " + std::to_string(ed.u) + " " + std::to_string(ed.v) + (sg.is_negative(e) ? " -\n" : " +\n");
  }
  return out;
}

std::string serialize_roles(const std::vector<EdgeRole>& roles) {
  std::string out;
  for (std::size_t e = 0; e < roles.size(); ++e) out += "role " + std::to_string(e) + " " + std::string(to_string(roles[e])) + "\n";
  return out;
}

std::vector<EdgeRole> parse_roles(std::string_view text, std::size_t edge_count) {
  std::vector<std::optional<EdgeRole>> seen(edge_count);
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    last_line = line_no;
    Tokens t = split(line);
    if (t.empty()) return;
    if (t.size() != 3 || t[0] != "role") throw ParseError(line_no, "expected 'role <edge> outer|spoke|inner'");
    std::size_t e = index_token(t[1], line_no, "edge index");
    if (e >= edge_count) throw ParseError(line_no, "edge index out of range");
    if (seen[e]) throw ParseError(line_no, "edge " + std::to_string(e) + " has two roles");
    try {
      seen[e] = parse_edge_role(t[2]);
    } catch (const std::invalid_argument&) {
      throw ParseError(line_no, "unknown role '" + std::string(t[2]) + "'");
    }
  });
  std::vector<EdgeRole> roles;
  for (std::size_t e = 0; e < edge_count; ++e) {
    if (!seen[e]) throw ParseError(last_line, "edge " + std::to_string(e) + " has no role");
    roles.push_back(*seen[e]);
  }
  return roles;
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "human") return OutputFormat::kHuman;
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "md") return OutputFormat::kMarkdown;
  throw InvalidInput("unknown output format '" + std::string(text) + "'");
}

std::string format_result(const SolveResult& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      nlohmann::json j;
      j["method"] = r.method;
      j["value"] = r.value;
      j["witness"] = r.witness;
      j["witness_kind"] = witness_kind_name(r.witness_kind);
      j["explored"] = r.explored;
      j["elapsed_ms"] = r.elapsed_ms;
      return j.dump() + "\n";
    }
    case OutputFormat::kCsv:
      return "method,value,witness,explored,elapsed_ms\n" + r.method + "," + std::to_string(r.value) + "," +
             join(r.witness, ';') + "," + std::to_string(r.explored) + "," + fixed_ms(r.elapsed_ms) + "\n";
    case OutputFormat::kMarkdown:
      return "| method | value | witness | explored | elapsed_ms |\n|---|---|---|---|---|\n| " + r.method + " | " +
             std::to_string(r.value) + " | " + join(r.witness, ' ') + " | " + std::to_string(r.explored) + " | " +
             fixed_ms(r.elapsed_ms) + " |\n";
    case OutputFormat::kHuman:
      break;
  }
  return "value: " + std::to_string(r.value) + "\nmethod: " + r.method + "\nwitness (" +
         std::string(witness_kind_name(r.witness_kind)) + "): " + join(r.witness, ' ') +
         "\nexplored: " + std::to_string(r.explored) + "\nelapsed_ms: " + fixed_ms(r.elapsed_ms) + "\n";
}

std::string format_reports(const std::vector<TheoremReport>& reports, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::kJson: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      return arr.dump(2) + "\n";
    }
    case OutputFormat::kCsv:
      out = "theorem,n,k,claim,computed,verdict\n";
      for (const auto& r : reports)
        out += r.theorem + "," + opt_num(r.n) + "," + opt_num(r.k) + "," + std::to_string(r.claim) + "," +
               std::to_string(r.computed) + "," + std::string(to_string(r.verdict)) + "\n";
      return out;
    case OutputFormat::kMarkdown:
      out = "| theorem | n | k | claim | computed | verdict |\n|---|---|---|---|---|---|\n";
      for (const auto& r : reports)
        out += "| " + r.theorem + " | " + opt_num(r.n) + " | " + opt_num(r.k) + " | " + r.claim_text() + " | " +
               std::to_string(r.computed) + " | " + std::string(to_string(r.verdict)) + " |\n";
      return out;
    case OutputFormat::kHuman:
      break;
  }
  for (const auto& r : reports) {
    out += std::string(to_string(r.verdict)) + "  " + r.theorem + "  " + r.instance + "  computed " +
           std::to_string(r.computed) + ", claim " + r.claim_text();
    if (r.sampled) out += " (sampled)";
    out += "\n";
    for (const auto& [key, value] : r.details) out += "    " + key + ": " + value + "\n";
    if (!r.note.empty()) out += "    " + r.note + "\n";
  }
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::kPass) ++pass;
    if (r.verdict == Verdict::kFail) ++fail;
    if (r.verdict == Verdict::kSkipped) ++skipped;
  }
  out += std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " + std::to_string(skipped) +
         " skipped\n";
  return out;
}

namespace {

std::vector<std::size_t> parse_number_list(std::string_view value, std::size_t line) {
  std::vector<std::size_t> out;
  for (std::string_view item : split(value, " \t,")) {
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      std::size_t a = index_token(item.substr(0, dots), line, "range start");
      std::size_t b = index_token(item.substr(dots + 2), line, "range end");
      if (a > b) throw ParseError(line, "empty range '" + std::string(item) + "'");
      for (std::size_t x = a; x <= b; ++x) out.push_back(x);
    } else {
      out.push_back(index_token(item, line, "number"));
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_pair_list(std::string_view value, std::size_t line) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::string_view item : split(value, " \t,")) {
    auto colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError(line, "expected n:k, got '" + std::string(item) + "'");
    out.emplace_back(index_token(item.substr(0, colon), line, "n"), index_token(item.substr(colon + 1), line, "k"));
  }
  return out;
}

}  // namespace

SuiteConfig parse_suite_config(std::string_view text) {
  SuiteConfig c = default_suite_config();
  std::set<std::string> seen;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (split(line).empty()) return;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    Tokens key_tokens = split(line.substr(0, eq));
    if (key_tokens.size() != 1) throw ParseError(line_no, "expected a single key before '='");
    const std::string key(key_tokens[0]);
    const std::string_view value = line.substr(eq + 1);
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate key '" + key + "'");
    auto scalar = [&] {
      Tokens t = split(value);
      if (t.size() != 1) throw ParseError(line_no, "'" + key + "' takes one value");
      return static_cast<std::uint64_t>(index_token(t[0], line_no, "number"));
    };

    if (key == "petersen_max_n") {
      const std::size_t max_n = scalar();
      c.petersen.clear();
      for (std::size_t n = 3; n <= max_n; ++n)
        for (std::size_t k = 1; 2 * k < n; ++k) c.petersen.emplace_back(n, k);
    } else if (key == "petersen") {
      c.petersen = parse_pair_list(value, line_no);
    } else if (key == "p3kk") {
      c.p3kk = parse_number_list(value, line_no);
    } else if (key == "restricted_n") {
      c.restricted_n = parse_number_list(value, line_no);
    } else if (key == "restricted_samples") {
      c.restricted_samples = scalar();
    } else if (key == "fi_fn") {
      c.fi_fn = parse_pair_list(value, line_no);
    } else if (key == "fi_fn_samples") {
      c.fi_fn_samples = scalar();
    } else if (key == "seed") {
      c.seed = scalar();
    } else if (key == "budget_states") {
      c.options.solver.budget_states = scalar();
    } else if (key == "budget_classes") {
      c.options.solver.budget_classes = scalar();
    } else if (key == "workers") {
      const auto w = scalar();
      if (w == 0 || w > 1024) throw ParseError(line_no, "workers must be in 1..1024");
      c.options.workers = static_cast<unsigned>(w);
    } else if (key == "symmetry") {
      Tokens t = split(value);
      if (t.size() != 1 || (t[0] != "on" && t[0] != "off")) throw ParseError(line_no, "symmetry must be on or off");
      c.options.solver.symmetry = t[0] == "on";
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  });
  return c;
}

}  // namespace sigfrust
