// Command-line frontend for the snakedimer library: exact counts,
// enumerations, transfer-matrix products, q-polynomials, number triangles,
// permutation bijections, twist lattices, snake duality, and planar-network
// matching models.  All results go to standard out, diagnostics to standard
// error; identical invocations produce byte-identical output.
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "snakedimer/bijections.hpp"
#include "snakedimer/dimer_cover.hpp"
#include "snakedimer/duality.hpp"
#include "snakedimer/errors.hpp"
#include "snakedimer/hasse.hpp"
#include "snakedimer/laurent.hpp"
#include "snakedimer/matrix.hpp"
#include "snakedimer/network.hpp"
#include "snakedimer/permutation.hpp"
#include "snakedimer/snake_graph.hpp"
#include "snakedimer/transfer.hpp"
#include "snakedimer/twist.hpp"

namespace {

using namespace snakedimer;

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ValidationError(what + " must be a comma-separated list of integers, got '" +
                            text + "'");
    }
  }
  if (out.empty()) throw ValidationError(what + " must not be empty");
  return out;
}

// 'standard', 'const:k', or a comma list with one value per canonical
// matching edge (or two, one per endpoint in edge order).
VertexLabeling parse_labels(const SnakeGraph& g, const std::string& spec) {
  if (spec == "standard") return VertexLabeling::standard(g);
  if (spec.rfind("const:", 0) == 0) {
    const std::vector<int> v = parse_int_list(spec.substr(6), "constant label");
    if (v.size() != 1) throw ValidationError("const: takes a single integer");
    return VertexLabeling::constant(g, v.front());
  }
  const std::vector<int> values = parse_int_list(spec, "labels");
  const std::vector<GridEdge>& matching = g.canonical_matching();
  if (values.size() == matching.size())
    return VertexLabeling::from_matching_values(g, values);
  if (values.size() == 2 * matching.size()) {
    std::map<GridPoint, int> by_vertex;
    for (size_t i = 0; i < matching.size(); ++i) {
      by_vertex[matching[i].a] = values[2 * i];
      by_vertex[matching[i].b] = values[2 * i + 1];
    }
    return VertexLabeling::from_values(g, std::move(by_vertex));
  }
  throw ValidationError("labels must be 'standard', 'const:k', or a comma list of " +
                        std::to_string(matching.size()) + " (one per matching edge) or " +
                        std::to_string(2 * matching.size()) +
                        " (one per endpoint) integers for this word");
}

CountMethod parse_method(const std::string& name) {
  if (name == "brute") return CountMethod::Brute;
  if (name == "matrix") return CountMethod::Matrix;
  if (name == "auto") return CountMethod::Auto;
  throw ValidationError("method must be brute, matrix, or auto, got '" + name + "'");
}

void require_format(const std::string& format, const std::vector<std::string>& allowed) {
  for (const std::string& f : allowed)
    if (format == f) return;
  std::string list;
  for (size_t i = 0; i < allowed.size(); ++i) list += (i ? ", " : "") + allowed[i];
  throw ValidationError("this subcommand supports formats " + list + ", got '" + format +
                        "'");
}

std::string point_json(const GridPoint& p) {
  return "[" + std::to_string(p.x) + ", " + std::to_string(p.y) + "]";
}

std::string edge_json(const GridEdge& e) {
  return "[" + point_json(e.a) + ", " + point_json(e.b) + "]";
}

std::string cover_json(const MixedDimerCover& cover) {
  std::ostringstream out;
  out << "{\"edges\": [";
  bool first = true;
  for (const auto& [e, m] : cover.entries()) {
    if (!first) out << ", ";
    first = false;
    out << "[" << point_json(e.a) << ", " << point_json(e.b) << ", " << m << "]";
  }
  out << "]}";
  return out.str();
}

std::string labels_json(const VertexLabeling& labels) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [p, v] : labels.values()) {
    if (!first) out << ", ";
    first = false;
    out << "\"" << p.x << "," << p.y << "\": " << v;
  }
  out << "}";
  return out.str();
}

std::string graph_json(const SnakeGraph& g, const VertexLabeling& labels) {
  std::ostringstream out;
  out << "{\n  \"word\": \"" << g.word() << "\",\n  \"vertices\": [";
  const std::vector<GridPoint> vertices = g.vertices();
  for (size_t i = 0; i < vertices.size(); ++i)
    out << (i ? ", " : "") << point_json(vertices[i]);
  out << "],\n  \"edges\": [";
  const std::vector<GridEdge> edges = g.edges();
  for (size_t i = 0; i < edges.size(); ++i) out << (i ? ", " : "") << edge_json(edges[i]);
  out << "],\n  \"labels\": " << labels_json(labels) << "\n}";
  return out.str();
}

MixedDimerCover parse_cover(const std::string& text) {
  std::map<GridEdge, int> mult;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    const size_t start = part.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    part = part.substr(start);
    int ax, ay, bx, by, m;
    if (std::sscanf(part.c_str(), "(%d,%d)-(%d,%d):%d", &ax, &ay, &bx, &by, &m) != 5)
      throw ValidationError("cover entries look like '(x,y)-(x,y):mult', got '" + part +
                            "'");
    mult[GridEdge(GridPoint{ax, ay}, GridPoint{bx, by})] += m;
  }
  return MixedDimerCover(mult);
}

std::vector<NetworkFactor> parse_factors(const std::string& text) {
  std::vector<NetworkFactor> factors;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    const size_t start = part.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    part = part.substr(start);
    if (part.size() < 2 || part[1] != ',')
      throw ValidationError("factors look like 'U,a,b;L,a,b;...', got '" + part + "'");
    const std::vector<int> dims = parse_int_list(part.substr(2), "factor dimensions");
    if (dims.size() != 2)
      throw ValidationError("each factor needs exactly two dimensions, got '" + part + "'");
    factors.push_back(NetworkFactor{part[0], dims[0], dims[1]});
  }
  if (factors.empty()) throw ValidationError("factor list must not be empty");
  return factors;
}

std::string one_line_str(const Permutation& sigma) {
  std::string out;
  for (int i = 1; i <= sigma.size(); ++i)
    out += (i > 1 ? "," : "") + std::to_string(sigma.at(i));
  return out;
}

struct Options {
  std::optional<std::string> word;
  std::string labels = "standard";
  std::string format = "text";
  std::string method = "auto";
  std::string qname = "q";
  long long guard = kDefaultGuard;
};

SnakeGraph require_word(const Options& opt) {
  if (!opt.word) throw ValidationError("this subcommand needs --word");
  return SnakeGraph(*opt.word);
}

void add_common(CLI::App* cmd, Options& opt, bool with_word = true) {
  if (with_word)
    cmd->add_option("--word", opt.word, "snake word over R/U (may be empty)");
  cmd->add_option("--labels", opt.labels,
                  "vertex labeling: standard, const:k, or comma list");
  cmd->add_option("--format", opt.format, "output format: text, json, or dot");
  cmd->add_option("--guard", opt.guard, "enumeration size guard");
  cmd->add_option("--method", opt.method, "counting method: brute, matrix, auto");
  cmd->add_option("--q", opt.qname, "name of the polynomial indeterminate");
}

int run(int argc, char** argv) {
  CLI::App app{"exact dimer-model computations on snake graphs"};
  app.require_subcommand(1);
  Options opt;

  auto* count = app.add_subcommand("count", "number of mixed dimer covers");
  add_common(count, opt);

  auto* enumerate = app.add_subcommand("enumerate", "list the mixed dimer covers");
  add_common(enumerate, opt);

  std::string family;
  bool weighted = false;
  auto* matrix = app.add_subcommand("matrix", "transfer-matrix product for a labeling");
  matrix->add_option("family", family, "straight or zigzag")->required();
  add_common(matrix, opt, false);
  matrix->add_flag("--weighted", weighted, "keep symbolic edge weights");

  std::string kind;
  std::optional<int> index;
  auto* qpoly = app.add_subcommand("qpoly", "q-analog polynomials");
  qpoly->add_option("kind", kind, "euler, catalan, or rank")->required();
  qpoly->add_option("n", index, "index for euler/catalan");
  add_common(qpoly, opt);

  std::string triangle_kind;
  int triangle_rows = 0;
  auto* tri = app.add_subcommand("triangle", "number triangles, one row per line");
  tri->add_option("kind", triangle_kind, "entringer, ballot, or seidel")->required();
  tri->add_option("n", triangle_rows, "number of rows")->required();

  std::string bijection_class, perm_text, cover_text;
  auto* bijection = app.add_subcommand("bijection", "permutation <-> cover translation");
  bijection->add_option("class", bijection_class, "alt or cat")->required();
  bijection->add_option("--perm", perm_text, "one-line permutation, e.g. 3,1,4,2");
  bijection->add_option("--cover", cover_text, "cover as '(x,y)-(x,y):m; ...'");
  add_common(bijection, opt);

  auto* hasse = app.add_subcommand("hasse", "face-twist lattice of a labeled word");
  add_common(hasse, opt);

  auto* dual = app.add_subcommand("dual", "dual word, transported labels, edge bijection");
  add_common(dual, opt);

  std::string factors_text;
  int euler_n = 0, catalan_n = 0, source_index = 0;
  std::optional<int> sink_index;
  auto* network = app.add_subcommand("network", "planar network for a factor chain");
  network->add_option("--factors", factors_text, "chain like 'U,1,1;L,1,2'");
  network->add_option("--euler", euler_n, "alternating-count chain for n");
  network->add_option("--catalan", catalan_n, "ballot-count chain for n");
  network->add_option("--source", source_index, "source position for --format dot");
  network->add_option("--sink", sink_index, "sink position for --format dot");
  add_common(network, opt, false);

  std::string matchings_family;
  int matchings_n = 0;
  auto* matchings = app.add_subcommand("matchings", "perfect-matching counts");
  matchings->add_option("family", matchings_family, "euler or catalan")->required();
  matchings->add_option("n", matchings_n, "family index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (count->parsed()) {
      require_format(opt.format, {"text"});
      const SnakeGraph g = require_word(opt);
      std::cout << count_covers(g, parse_labels(g, opt.labels), parse_method(opt.method),
                                opt.guard)
                << "\n";
    } else if (enumerate->parsed()) {
      require_format(opt.format, {"text", "json"});
      const SnakeGraph g = require_word(opt);
      const std::vector<MixedDimerCover> covers =
          enumerate_covers(g, parse_labels(g, opt.labels), opt.guard);
      if (opt.format == "json") {
        std::cout << "[\n";
        for (size_t i = 0; i < covers.size(); ++i)
          std::cout << "  " << cover_json(covers[i]) << (i + 1 < covers.size() ? "," : "")
                    << "\n";
        std::cout << "]\n";
      } else {
        for (const MixedDimerCover& c : covers) std::cout << c.str() << "\n";
      }
    } else if (matrix->parsed()) {
      require_format(opt.format, {"text"});
      const std::vector<int> m = parse_int_list(opt.labels, "matrix labels");
      LaurentMatrix product = LaurentMatrix::identity(1);
      if (family == "straight")
        product = weighted ? weighted_straight_product(
                                 m, default_edge_symbols(static_cast<int>(m.size()) - 1))
                           : straight_product(m);
      else if (family == "zigzag")
        product = weighted ? weighted_zigzag_product(
                                 m, default_edge_symbols(static_cast<int>(m.size()) - 1))
                           : zigzag_product(m);
      else
        throw ValidationError("matrix family must be straight or zigzag, got '" + family +
                              "'");
      std::cout << product.str() << "\n";
    } else if (qpoly->parsed()) {
      require_format(opt.format, {"text"});
      const Indeterminate q(opt.qname);
      if (kind == "euler" || kind == "catalan") {
        if (!index) throw ValidationError("qpoly " + kind + " needs an index");
        std::cout << (kind == "euler" ? q_euler_poly(*index, q) : q_catalan_poly(*index, q))
                         .str()
                  << "\n";
      } else if (kind == "rank") {
        const SnakeGraph g = require_word(opt);
        std::cout << rank_polynomial(
                         build_lattice(g, parse_labels(g, opt.labels), opt.guard), q)
                         .str()
                  << "\n";
      } else {
        throw ValidationError("qpoly kind must be euler, catalan, or rank, got '" + kind +
                              "'");
      }
    } else if (tri->parsed()) {
      TriangleKind tk;
      if (triangle_kind == "entringer")
        tk = TriangleKind::Entringer;
      else if (triangle_kind == "ballot")
        tk = TriangleKind::Ballot;
      else if (triangle_kind == "seidel")
        tk = TriangleKind::Seidel;
      else
        throw ValidationError("triangle kind must be entringer, ballot, or seidel, got '" +
                              triangle_kind + "'");
      const NumberTriangle t = triangle(tk, triangle_rows);
      for (int n = 1; n <= t.row_count(); ++n) {
        const std::vector<BigInt>& row = t.row(n);
        for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
        std::cout << "\n";
      }
    } else if (bijection->parsed()) {
      require_format(opt.format, {"text"});
      if (perm_text.empty() == cover_text.empty())
        throw ValidationError("bijection needs exactly one of --perm or --cover");
      const bool alt = bijection_class == "alt";
      if (!alt && bijection_class != "cat")
        throw ValidationError("bijection class must be alt or cat, got '" +
                              bijection_class + "'");
      if (!perm_text.empty()) {
        const Permutation sigma = Permutation::parse(perm_text);
        std::cout << (alt ? alt_to_cover(sigma) : cat_to_cover(sigma)).str() << "\n";
      } else {
        const SnakeGraph g = require_word(opt);
        const MixedDimerCover cover = parse_cover(cover_text);
        std::cout << one_line_str(alt ? cover_to_alt(g, cover) : cover_to_cat(g, cover))
                  << "\n";
      }
    } else if (hasse->parsed()) {
      require_format(opt.format, {"dot", "json"});
      const SnakeGraph g = require_word(opt);
      const HasseDiagram lattice = build_lattice(g, parse_labels(g, opt.labels), opt.guard);
      std::cout << (opt.format == "json" ? hasse_to_json(lattice) : hasse_to_dot(lattice));
    } else if (dual->parsed()) {
      require_format(opt.format, {"text", "json"});
      const SnakeGraph g = require_word(opt);
      const DualMap fold = dual_map(g, parse_labels(g, opt.labels));
      if (opt.format == "json") {
        std::cout << "{\n  \"word\": \"" << g.word() << "\",\n  \"dual\": ";
        std::istringstream dual_graph(graph_json(fold.dual, fold.labels));
        std::string line;
        bool first = true;
        while (std::getline(dual_graph, line)) {
          std::cout << (first ? "" : "\n  ") << line;
          first = false;
        }
        std::cout << ",\n  \"edge_map\": [";
        bool first_edge = true;
        for (const auto& [from, to] : fold.edge_map) {
          std::cout << (first_edge ? "" : ", ") << "[" << edge_json(from) << ", "
                    << edge_json(to) << "]";
          first_edge = false;
        }
        std::cout << "]\n}\n";
      } else {
        std::cout << "dual: " << fold.dual.word() << "\n";
        for (const auto& [p, v] : fold.labels.values())
          std::cout << "label " << to_string(p) << " = " << v << "\n";
        for (const auto& [from, to] : fold.edge_map)
          std::cout << to_string(from) << " -> " << to_string(to) << "\n";
      }
    } else if (network->parsed()) {
      require_format(opt.format, {"text", "json", "dot"});
      const int selectors = (!factors_text.empty()) + (euler_n > 0) + (catalan_n > 0);
      if (selectors != 1)
        throw ValidationError(
            "network needs exactly one of --factors, --euler, or --catalan");
      std::vector<NetworkFactor> chain;
      if (!factors_text.empty())
        chain = parse_factors(factors_text);
      else if (euler_n > 0)
        chain = euler_chain_factors(euler_n);
      else
        chain = catalan_chain_factors(catalan_n);
      const Network net = network_for_factors(chain);
      if (opt.format == "json") {
        std::cout << network_to_json(net);
      } else if (opt.format == "dot") {
        const int sink = sink_index.value_or(
            chain.back().kind == 'U' ? static_cast<int>(net.sinks().size()) - 1 : 0);
        std::cout << matching_graph_to_dot(perfectly_orient(net, source_index, sink));
      } else {
        std::cout << path_weight_matrix(net).str() << "\n";
      }
    } else if (matchings->parsed()) {
      std::vector<NetworkFactor> chain;
      if (matchings_family == "euler")
        chain = euler_chain_factors(matchings_n);
      else if (matchings_family == "catalan")
        chain = catalan_chain_factors(matchings_n);
      else
        throw ValidationError("matchings family must be euler or catalan, got '" +
                              matchings_family + "'");
      const Network net = network_for_factors(chain);
      const int sink =
          chain.back().kind == 'U' ? static_cast<int>(net.sinks().size()) - 1 : 0;
      std::cout << count_perfect_matchings(perfectly_orient(net, 0, sink)) << "\n";
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
