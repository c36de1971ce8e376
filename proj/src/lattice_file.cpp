#include "zdlat/lattice_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "zdlat/ring_ideals.hpp"

namespace zdlat {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

}  // namespace

LatticeFile parse_lattice_file(std::string_view text) {
  LatticeFile f;
  bool have_header = false, have_elements = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const auto t = tokens(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (t.empty()) continue;

    const std::string& key = t[0];
    if (!have_header) {
      if (key != "lattice" || t.size() != 2) fail(line_no, "expected 'lattice <name>'");
      f.name = t[1];
      have_header = true;
    } else if (key == "elements") {
      if (have_elements) fail(line_no, "duplicate 'elements' line");
      if (t.size() < 2) fail(line_no, "'elements' needs at least one label");
      f.elements.assign(t.begin() + 1, t.end());
      have_elements = true;
    } else if (key == "cover") {
      if (t.size() != 3) fail(line_no, "expected 'cover <a> <b>'");
      f.covers.emplace_back(t[1], t[2]);
    } else if (key == "mult") {
      if (t.size() != 2 || (t[1] != "meet" && t[1] != "trivial")) fail(line_no, "expected 'mult meet' or 'mult trivial'");
      if (f.mult != MultKind::none) fail(line_no, "multiplication given twice");
      f.mult = t[1] == "meet" ? MultKind::meet : MultKind::trivial;
    } else if (key == "prod") {
      if (t.size() != 4) fail(line_no, "expected 'prod <a> <b> <c>'");
      if (f.mult != MultKind::none && f.mult != MultKind::explicit_table)
        fail(line_no, "'prod' lines cannot be combined with 'mult'");
      f.mult = MultKind::explicit_table;
      f.products.push_back({t[1], t[2], t[3]});
    } else if (key == "lattice") {
      fail(line_no, "only one lattice per file");
    } else {
      fail(line_no, "unknown directive '" + key + "'");
    }
  }
  if (!have_header) fail(line_no, "missing 'lattice <name>' header");
  if (!have_elements) fail(line_no, "missing 'elements' line");
  return f;
}

LatticeFile read_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_lattice_file(ss.str());
}

std::string serialize(const LatticeFile& f) {
  std::ostringstream os;
  os << "lattice " << f.name << '\n' << "elements";
  for (const auto& e : f.elements) os << ' ' << e;
  os << '\n';
  for (const auto& [a, b] : f.covers) os << "cover " << a << ' ' << b << '\n';
  switch (f.mult) {
    case MultKind::none: break;
    case MultKind::meet: os << "mult meet\n"; break;
    case MultKind::trivial: os << "mult trivial\n"; break;
    case MultKind::explicit_table:
      for (const auto& p : f.products) os << "prod " << p.a << ' ' << p.b << ' ' << p.product << '\n';
      break;
  }
  return os.str();
}

FiniteLattice to_lattice(const LatticeFile& f) { return build_lattice(f.elements, f.covers); }

MultLattice to_mult_lattice(const LatticeFile& f) {
  FiniteLattice L = to_lattice(f);
  switch (f.mult) {
    case MultKind::none:
      throw Error(ErrorCode::parse_error, "lattice '" + f.name + "' has no multiplication");
    case MultKind::meet: return with_meet_mult(L);
    case MultKind::trivial: return with_trivial_mult(L);
    case MultKind::explicit_table: break;
  }

  const std::size_t n = L.size();
  std::vector<std::optional<Element>> cells(n * n);
  for (const auto& p : f.products) {
    const Element a = L.index_of(p.a), b = L.index_of(p.b), c = L.index_of(p.product);
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      auto& cell = cells[x * n + y];
      if (cell && *cell != c)
        throw Error(ErrorCode::parse_error, "conflicting products given for " + p.a + "·" + p.b, {a, b});
      cell = c;
    }
  }
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (auto v = cells[a * n + b]) {
        table[a * n + b] = *v;
      } else if (a == L.top() || b == L.top()) {
        table[a * n + b] = a == L.top() ? b : a;
      } else {
        throw Error(ErrorCode::parse_error,
                    "explicit multiplication is missing " + L.label(a) + "·" + L.label(b), {a, b});
      }
    }
  return attach_multiplication(std::move(L), std::move(table));
}

LatticeFile to_lattice_file(const std::string& name, const MultLattice& m) {
  const auto& L = m.lattice();
  LatticeFile f;
  f.name = name;
  f.elements = L.labels();
  for (auto [a, b] : L.covering_pairs()) f.covers.emplace_back(L.label(a), L.label(b));
  f.mult = MultKind::explicit_table;
  for (Element a = 0; a < L.size(); ++a)
    for (Element b = a; b < L.size(); ++b)
      if (a != L.top() && b != L.top()) f.products.push_back({L.label(a), L.label(b), L.label(m.mult(a, b))});
  return f;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::vector<std::string> isolated;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.degree(v) == 0) isolated.push_back(g.label(v));
  for (auto [u, v] : g.edges()) edges.emplace_back(std::minmax(g.label(u), g.label(v)));
  std::sort(isolated.begin(), isolated.end());
  std::sort(edges.begin(), edges.end());

  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& v : isolated) os << "  " << quoted(v) << ";\n";
  for (const auto& [a, b] : edges) os << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace zdlat
