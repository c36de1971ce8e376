#include "zdlat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "zdlat/enumerate.hpp"
#include "zdlat/graph_metrics.hpp"
#include "zdlat/lattice_file.hpp"
#include "zdlat/ring_ideals.hpp"
#include "zdlat/theorems.hpp"

namespace zdlat::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct SourceArgs {
  std::string file;
  std::optional<std::uint64_t> ring;
  std::vector<std::uint64_t> product;
};

struct Loaded {
  std::string name;
  FiniteLattice lattice;
  std::optional<MultLattice> mult;
};

std::string ring_name(const SourceArgs& s) {
  std::string name = "Z_" + std::to_string(*s.ring);
  for (auto m : s.product) name += "xZ_" + std::to_string(m);
  return name;
}

Loaded load(const SourceArgs& s, bool need_mult) {
  if (s.ring) {
    std::vector<std::uint64_t> moduli{*s.ring};
    moduli.insert(moduli.end(), s.product.begin(), s.product.end());
    MultLattice m = ideal_lattice_product(moduli);
    return {ring_name(s), m.lattice(), m};
  }
  if (s.file.empty()) throw Error(ErrorCode::parse_error, "give a lattice file or --ring <n>");
  LatticeFile f = read_lattice_file(s.file);
  if (f.mult == MultKind::none) {
    if (need_mult) throw Error(ErrorCode::parse_error, "lattice '" + f.name + "' has no multiplication");
    return {f.name, to_lattice(f), std::nullopt};
  }
  MultLattice m = to_mult_lattice(f);
  return {f.name, m.lattice(), m};
}

void add_source_options(CLI::App* cmd, SourceArgs& s, bool with_product) {
  cmd->add_option("file", s.file, "lattice file");
  auto* ring = cmd->add_option("--ring", s.ring, "use the ideal lattice of Z_n");
  if (with_product) cmd->add_option("--product", s.product, "further factors Z_m of the ring")->needs(ring);
}

void print_graph(std::ostream& out, const char* title, const Graph& g, const GraphMetrics& m) {
  out << title << '\n' << "  vertices:";
  for (std::size_t v = 0; v < g.size(); ++v) out << ' ' << g.label(v);
  out << "\n  edges:";
  for (auto [u, v] : g.edges()) out << ' ' << g.label(u) << "--" << g.label(v);
  out << "\n  metrics: vertices=" << m.vertex_count << " edges=" << m.edge_count
      << " connected=" << yes_no(m.connected) << " diameter=" << m.diameter.to_string()
      << " girth=" << girth_to_string(m.girth) << " bipartite=" << yes_no(m.bipartite)
      << " complete_bipartite=" << yes_no(m.complete_bipartite);
  if (m.complete_bipartite) {
    auto part = [&](const std::vector<std::size_t>& p) {
      std::string s = "{";
      for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + g.label(p[i]);
      return s + "}";
    };
    out << " parts=" << part(m.part_a) << '|' << part(m.part_b);
  }
  out << " complete=" << yes_no(m.is_complete) << " star=" << yes_no(m.is_star);
  if (m.size_guard_exceeded)
    out << " clique=guard chromatic=guard";
  else
    out << " clique=" << m.clique_number.value_or(0) << " chromatic=" << m.chromatic_number.value_or(0);
  out << '\n';
}

int analyze(const Loaded& in, std::ostream& out, std::ostream& err) {
  const auto& L = in.lattice;
  bool guard = false;
  out << "lattice " << in.name << '\n';
  out << "elements (" << L.size() << "):";
  for (const auto& l : L.labels()) out << ' ' << l;
  out << "\nbottom: " << L.label(L.bottom()) << "\ntop: " << L.label(L.top()) << '\n';
  out << "atoms: " << format_set(L, atoms(L)) << '\n';
  out << "distributive: " << yes_no(is_distributive(L)) << '\n';
  out << "0-distributive: " << yes_no(is_0_distributive(L)) << '\n';
  if (!prime_ideal_search_is_exhaustive(L))
    err << "note: " << L.size() << " elements; prime ideals searched among principal ideals only\n";
  out << "minimal prime ideals:";
  for (const auto& s : minimal_prime_ideals(L)) out << ' ' << format_set(L, s);
  out << '\n';
  if (L.size() < 2) {
    out << "graphs: none (one-element lattice)\n";
    return kSuccess;
  }

  if (in.mult) {
    const MultLattice& m = *in.mult;
    const auto zd = zero_divisor_set(m);
    out << "reduced: " << yes_no(is_reduced(m)) << '\n';
    out << "nilpotents: " << format_set(L, nil_set(m)) << '\n';
    out << "prime elements: " << format_set(L, prime_elements(m)) << '\n';
    out << "minimal prime elements: " << format_set(L, minimal_prime_elements(m)) << '\n';
    out << "Z*: " << format_set(L, zd.z_star) << '\n';
    out << "Z ideal: " << yes_no(zd.z_is_ideal) << '\n';
  }

  const Graph meet_graph = gamma_meet(L);
  const auto meet_metrics = metrics(meet_graph);
  guard = guard || meet_metrics.size_guard_exceeded;
  print_graph(out, "graph meet (ideal {0})", meet_graph, meet_metrics);

  if (in.mult) {
    const Graph mult_graph = gamma_mult(*in.mult);
    const auto mult_metrics = metrics(mult_graph);
    guard = guard || mult_metrics.size_guard_exceeded;
    print_graph(out, "graph mult (element 0)", mult_graph, mult_metrics);
    const auto dc = classify_diameter(*in.mult);
    if (dc.applicable)
      out << "diameter class: predicted="
          << (dc.predicted ? std::to_string(*dc.predicted) : std::string("none"))
          << " computed=" << dc.computed.to_string() << " agree=" << yes_no(dc.agree) << '\n';
    else
      out << "diameter class: not applicable, " << dc.bound << '\n';
  }
  if (guard) {
    err << "error: graph exceeds the exact clique/chromatic size guard\n";
    return kSizeGuard;
  }
  return kSuccess;
}

int theorems(const Loaded& in, bool verbose, std::ostream& out) {
  const auto reports = check_all(*in.mult);
  for (const auto& r : reports) {
    out << format_line(r) << '\n';
    if (!verbose) continue;
    out << "  statement: " << r.statement << '\n';
    for (const auto& h : r.hypotheses) out << "  hypothesis " << h.name << ": " << yes_no(h.holds) << '\n';
    out << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << '\n';
    if (!r.note.empty()) out << "  note: " << r.note << '\n';
  }
  return any_refuted(reports) ? kRefuted : kSuccess;
}

int enumerate(const std::string& name, std::optional<std::size_t> limit, bool report, std::size_t cap,
              std::size_t jobs, std::ostream& out) {
  const FiniteLattice& base = catalog_entry(name);
  std::size_t instances = 0, refuted = 0;
  std::map<std::string, std::map<Verdict, std::size_t>> tally;

  auto visit = [&](const MultLattice& m) {
    const std::size_t index = instances++;
    if (!report) return true;
    const auto reports = check_all(m);
    for (const auto& r : reports) ++tally[r.id][r.verdict];
    if (any_refuted(reports)) {
      ++refuted;
      out << "instance " << index << " reduced=" << yes_no(is_reduced(m)) << '\n';
      for (const auto& r : reports)
        if (r.verdict == Verdict::refuted) out << "  " << format_line(r) << '\n';
    }
    return true;
  };

  if (jobs > 1 && !limit) {
    if (base.size() > cap)
      throw Error(ErrorCode::cap_exceeded, "enumeration is capped at " + std::to_string(cap) + " elements");
    for (const auto& m : enumerate_parallel(base, 2, jobs, cap)) visit(m);
  } else {
    enumerate_multiplications({base, limit, {}, cap}, visit);
  }

  if (report)
    for (const auto& id : theorem_ids()) {
      auto& t = tally[id];
      out << id << " confirmed=" << t[Verdict::confirmed] << " vacuous=" << t[Verdict::vacuous]
          << " refuted=" << t[Verdict::refuted] << " size-skipped=" << t[Verdict::size_skipped] << '\n';
    }
  out << "instances=" << instances << " refuted=" << refuted << '\n';
  return refuted > 0 ? kRefuted : kSuccess;
}

int export_dot(const Loaded& in, const std::string& which, const std::string& path, std::ostream& out) {
  if (in.lattice.size() < 2)
    throw Error(ErrorCode::degenerate_lattice, "zero-divisor graphs need a lattice with at least two elements");
  std::string text;
  if (which == "meet") {
    text = to_dot(gamma_meet(in.lattice));
  } else {
    if (!in.mult) throw Error(ErrorCode::parse_error, "the mult graph needs a multiplication");
    text = to_dot(gamma_mult(*in.mult));
  }
  if (path.empty() || path == "-") {
    out << text;
    return kSuccess;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::parse_error, "cannot write '" + path + "'");
  file << text;
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-divisor graphs of finite multiplicative lattices", "zdlat"};
  app.require_subcommand(1);

  SourceArgs analyze_src, theorems_src, dot_src;
  std::uint64_t ring_n = 0;
  std::vector<std::uint64_t> ring_product;
  bool verbose = false;
  std::string catalog_name;
  std::optional<std::size_t> limit;
  bool report = false;
  std::size_t cap = kEnumerationCap;
  std::size_t jobs = 1;
  std::string graph_kind = "mult";
  std::string output;

  auto* analyze_cmd = app.add_subcommand("analyze", "summarize a lattice file and its zero-divisor graphs");
  add_source_options(analyze_cmd, analyze_src, true);

  auto* ring_cmd = app.add_subcommand("ring", "analyze the ideal lattice of Z_n (or a product of such rings)");
  ring_cmd->add_option("n", ring_n, "modulus")->required();
  ring_cmd->add_option("--product", ring_product, "further factors Z_m");

  auto* theorems_cmd = app.add_subcommand("theorems", "check every statement of the catalog");
  add_source_options(theorems_cmd, theorems_src, true);
  theorems_cmd->add_flag("-v,--verbose", verbose, "print hypotheses and both sides");

  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate every multiplication on a catalog lattice");
  enum_cmd->add_option("--catalog", catalog_name, "catalog lattice name")->required();
  enum_cmd->add_option("--limit", limit, "stop after this many instances");
  enum_cmd->add_flag("--report", report, "run the theorem suite on each instance");
  enum_cmd->add_option("--cap", cap, "largest lattice size to enumerate");
  enum_cmd->add_option("--jobs", jobs, "worker threads");

  auto* dot_cmd = app.add_subcommand("export-dot", "write a zero-divisor graph in DOT format");
  add_source_options(dot_cmd, dot_src, true);
  dot_cmd->add_option("--graph", graph_kind, "meet or mult")->check(CLI::IsMember({"meet", "mult"}));
  dot_cmd->add_option("-o", output, "output path ('-' for standard output)");

  std::vector<const char*> argv{"zdlat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*analyze_cmd) return analyze(load(analyze_src, false), out, err);
    if (*ring_cmd) return analyze(load({"", ring_n, ring_product}, true), out, err);
    if (*theorems_cmd) return theorems(load(theorems_src, true), verbose, out);
    if (*enum_cmd) return enumerate(catalog_name, limit, report, cap, jobs, out);
    if (*dot_cmd) return export_dot(load(dot_src, graph_kind == "mult"), graph_kind, output, out);
  } catch (const AxiomViolation& e) {
    err << "error: AxiomViolation: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    const bool size = e.code() == ErrorCode::size_guard || e.code() == ErrorCode::cap_exceeded;
    return size ? kSizeGuard : kInputError;
  }
  return kInputError;
}

}  // namespace zdlat::cli
