// weilgraph: command-line front end.
//
// Exit codes: 0 success, 2 malformed input or arguments, 3 precondition
// violation, 4 verification counterexample, 1 anything else.

#include "weilgraph/document.hpp"
#include "weilgraph/double_cover.hpp"
#include "weilgraph/homology.hpp"
#include "weilgraph/tropical.hpp"
#include "weilgraph/twisted_curve.hpp"
#include "weilgraph/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace wg = weilgraph;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCounterexample = 4;

struct CommandOutcome {
  wg::Report report;
  std::string text;
  bool counterexample = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw wg::ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::size_t> parse_index_list(const std::string& text, const std::string& flag) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item[0] == '-') throw wg::ParseError(flag + ": '" + item + "' is not an index");
    out.push_back(static_cast<std::size_t>(value));
  }
  return out;
}

json bits_json(const wg::Gf2Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(static_cast<int>(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const wg::Gf2Matrix& m, const std::string& indent) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << indent;
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << static_cast<int>(m(i, j));
    os << '\n';
  }
  return os.str();
}

std::string list_text(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

json divisor_json(const wg::Divisor& d) {
  json support = json::array();
  for (Eigen::Index v = 0; v < d.size(); ++v)
    if (!d(v).is_zero()) support.push_back({{"vertex", v}, {"chips", d(v).str()}});
  return support;
}

CommandOutcome cmd_homology(const wg::InputDocument& doc) {
  const wg::MultiGraph g = doc.graph();
  const wg::HomologyBasis basis = wg::homology_basis(g);
  const wg::PairingCheck check = wg::is_perfect_pairing(g);

  CommandOutcome out;
  out.report.command = "homology";
  out.report.input_digest = wg::document_digest(doc);
  json cycles = json::array(), cocycles = json::array();
  std::ostringstream os;
  os << "genus: " << wg::genus(g) << "\ncomponents: " << wg::component_count(g) << "\ncycle basis:\n";
  for (const auto& c : basis.cycles) {
    cycles.push_back(c.support());
    os << "  " << list_text(c.support()) << '\n';
  }
  os << "cocycle basis:\n";
  for (const auto& c : basis.cocycles) {
    cocycles.push_back(c.support());
    os << "  " << list_text(c.support()) << '\n';
  }
  os << "gram:\n" << matrix_text(check.gram, "  ") << "perfect: " << (check.perfect ? "true" : "false") << '\n';
  out.report.result = {{"genus", wg::genus(g)},
                       {"components", wg::component_count(g)},
                       {"cycles", cycles},
                       {"cocycles", cocycles},
                       {"gram", bits_json(check.gram)},
                       {"perfect", check.perfect}};
  out.text = os.str();
  out.counterexample = !check.perfect;
  return out;
}

CommandOutcome cmd_cover(const wg::InputDocument& doc, const std::vector<std::size_t>& gamma_support,
                         const std::vector<std::size_t>& alpha_support, const std::string& dot_path) {
  const wg::MultiGraph g = doc.graph();
  const auto gamma = wg::Cochain1::from_support(g.edge_count(), gamma_support);
  const auto alpha = wg::Chain1::from_support(g.edge_count(), alpha_support);
  const wg::DoubleCover cover = wg::build_double_cover(g, gamma);
  const wg::CycleLift lift = wg::lift_cycle(cover, alpha);
  const std::uint8_t via_cover = lift.component_count == 1 ? 1 : 0;
  const std::uint8_t direct = wg::graph_pairing(g, gamma, alpha);

  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw wg::PreconditionError("cannot write '" + dot_path + "'");
    wg::write_cover_dot(dot, cover);
  }

  CommandOutcome out;
  out.report.command = "cover";
  out.report.input_digest = wg::document_digest(doc);
  json lengths = json::array();
  std::ostringstream os;
  os << "cycle length: " << lift.base_length << "\nlift components: " << lift.component_count << "\nlengths:";
  for (const auto& comp : lift.components) {
    lengths.push_back(comp.size());
    os << ' ' << comp.size();
  }
  os << "\npairing: " << int(via_cover) << "\ngraph pairing: " << int(direct)
     << "\nagree: " << (via_cover == direct ? "true" : "false") << '\n';
  out.report.result = {{"gamma", gamma_support},
                       {"alpha", alpha.support()},
                       {"cycle_length", lift.base_length},
                       {"components", lift.component_count},
                       {"component_lengths", lengths},
                       {"pairing", via_cover},
                       {"graph_pairing", direct},
                       {"agree", via_cover == direct}};
  out.text = os.str();
  out.counterexample = via_cover != direct;
  return out;
}

CommandOutcome cmd_torsion(const wg::InputDocument& doc) {
  const wg::TwistedCurveModel model = doc.model();
  const wg::WeilFormModel w = wg::weil_form(model);
  const std::size_t reduced_genus = wg::genus(w.reduced.deletion.graph);
  const bool nondegenerate = wg::is_nondegenerate(model);

  CommandOutcome out;
  out.report.command = "torsion";
  out.report.input_digest = wg::document_digest(doc);
  const wg::BigInt order = wg::two_torsion_order(model);
  std::ostringstream os;
  os << "arithmetic genus g: " << model.arithmetic_genus() << "\ngraph genus g': " << model.graph_genus()
     << "\nreduced graph genus g'': " << reduced_genus << "\n|Pic[2]|: " << order
     << " = 2^" << wg::two_torsion_exponent(model) << "\nnon-degenerate: " << (nondegenerate ? "true" : "false")
     << "\nweil form (" << w.blocks.h << " + " << w.blocks.component << " + " << w.blocks.q << "):\n"
     << matrix_text(w.gram, "  ");
  out.report.result = {{"arithmetic_genus", model.arithmetic_genus()},
                       {"graph_genus", model.graph_genus()},
                       {"reduced_genus", reduced_genus},
                       {"two_torsion_order", order.str()},
                       {"two_torsion_exponent", wg::two_torsion_exponent(model)},
                       {"nondegenerate", nondegenerate},
                       {"gram_invertible", wg::gf2_is_invertible(w.gram)},
                       {"blocks", {{"h", w.blocks.h}, {"component", w.blocks.component}, {"q", w.blocks.q}}},
                       {"gram", bits_json(w.gram)}};
  out.text = os.str();
  out.counterexample = wg::gf2_is_invertible(w.gram) != nondegenerate;
  return out;
}

wg::SubdivisionMode parse_mode(const std::string& mode) {
  if (mode == "all") return wg::SubdivisionMode::all_edges;
  if (mode == "nonsep") return wg::SubdivisionMode::non_separating;
  if (mode == "none") return wg::SubdivisionMode::none;
  throw wg::ParseError("--mode must be one of all, nonsep, none");
}

CommandOutcome cmd_tropical(const wg::InputDocument& doc, std::size_t r, const std::string& mode_name) {
  const wg::SubdivisionMode mode = parse_mode(mode_name);
  const wg::TorsionReport rep = wg::verify_torsion_on_subdivision(doc.graph(), r, mode);

  CommandOutcome out;
  out.report.command = "tropical";
  out.report.input_digest = wg::document_digest(doc);
  json factors = json::array(), gens = json::array();
  std::ostringstream os;
  os << "subdivision: r = " << r << ", mode = " << wg::to_string(mode) << ", " << rep.subdivided.child.vertex_count()
     << " vertices, " << rep.subdivided.child.edge_count() << " edges\ninvariant factors:";
  for (const auto& f : rep.invariant_factors) {
    factors.push_back(f.str());
    os << ' ' << f;
  }
  os << "\nr-torsion count: " << rep.torsion_count << "\nexpected r^g': " << rep.expected;
  if (rep.literal_count != rep.expected) os << "\nnote: r^(2g') = " << rep.literal_count << " differs from expected";
  os << "\nverdict: " << (rep.verdict ? "true" : "false") << "\ngenerators:\n";
  for (const auto& d : rep.generators) {
    gens.push_back(divisor_json(d));
    os << ' ';
    for (Eigen::Index v = 0; v < d.size(); ++v)
      if (!d(v).is_zero()) os << ' ' << d(v) << "*v" << v;
    os << '\n';
  }
  out.report.result = {{"r", r},
                       {"mode", wg::to_string(mode)},
                       {"child_vertices", rep.subdivided.child.vertex_count()},
                       {"child_edges", rep.subdivided.child.edge_count()},
                       {"invariant_factors", factors},
                       {"torsion_count", rep.torsion_count.str()},
                       {"expected", rep.expected.str()},
                       {"literal_count", rep.literal_count.str()},
                       {"literal_count_differs", rep.literal_count != rep.expected},
                       {"verdict", rep.verdict},
                       {"generators", gens}};
  out.text = os.str();
  // The unsubdivided diagnostic mode is expected to fall short.
  out.counterexample = !rep.verdict && mode != wg::SubdivisionMode::none;
  return out;
}

CommandOutcome cmd_verify(std::size_t max_edges, const std::vector<std::size_t>& r_values, bool inject_fault) {
  wg::SweepOptions opts;
  opts.max_edges = max_edges;
  opts.max_model_edges = std::min<std::size_t>(max_edges, 5);
  opts.r_values = r_values;
  opts.inject_fault = inject_fault;
  for (std::size_t r : r_values)
    if (r == 0) throw wg::PreconditionError("--r values must be at least 1");

  CommandOutcome out;
  out.report.command = "verify";
  out.report.input_digest = "";
  json sweeps = json::array();
  std::ostringstream os;
  for (const wg::SweepResult& s : wg::run_verification(opts)) {
    sweeps.push_back({{"name", s.name},
                      {"instances", s.instances},
                      {"failures", s.failures},
                      {"counterexample", s.counterexample}});
    os << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.instances << " instances, " << s.failures
       << " failures\n";
    if (!s.passed()) os << "  counterexample: " << s.counterexample << '\n';
    out.counterexample = out.counterexample || !s.passed();
  }
  out.report.result = {{"max_edges", max_edges}, {"r_values", r_values}, {"sweeps", sweeps}};
  out.text = os.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph homology pairings, double covers, twisted-curve 2-torsion and tropical r-torsion"};
  app.require_subcommand(1);

  std::string graph_path;
  bool as_json = false;
  std::string gamma_text, alpha_text, dot_path, mode = "all", r_list = "2,3,4,5";
  std::size_t r = 2, max_edges = 6;
  bool inject_fault = false;

  auto add_common = [&](CLI::App* sub, bool needs_graph) {
    if (needs_graph) sub->add_option("--graph", graph_path, "input document ('-' for stdin)")->required();
    sub->add_flag("--json", as_json, "print the machine-readable report");
  };

  auto* homology = app.add_subcommand("homology", "cycle/cocycle bases and the graph pairing");
  add_common(homology, true);

  auto* cover = app.add_subcommand("cover", "lift a cycle to the double cover classified by a cochain");
  add_common(cover, true);
  cover->add_option("--gamma", gamma_text, "cochain support as edge indices i,j,...");
  cover->add_option("--alpha", alpha_text, "simple cycle as edge indices i,j,...")->required();
  cover->add_option("--dot", dot_path, "write the cover as Graphviz DOT");

  auto* torsion = app.add_subcommand("torsion", "2-torsion order and Weil form of a twisted-curve model");
  add_common(torsion, true);

  auto* tropical = app.add_subcommand("tropical", "r-torsion of the critical group of the r-subdivision");
  add_common(tropical, true);
  tropical->add_option("--r", r, "subdivision factor")->required();
  tropical->add_option("--mode", mode, "all | nonsep | none");

  auto* verify = app.add_subcommand("verify", "exhaustive property sweeps over small multigraphs");
  add_common(verify, false);
  verify->add_option("--max-edges", max_edges, "edge bound for the graph sweeps");
  verify->add_option("--r", r_list, "comma-separated subdivision factors");
  verify->add_flag("--inject-fault", inject_fault, "corrupt one Gram bit to self-test the harness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    CommandOutcome out;
    if (*verify) {
      out = cmd_verify(max_edges, parse_index_list(r_list, "--r"), inject_fault);
    } else {
      const wg::InputDocument doc = wg::parse_document(read_input(graph_path));
      if (*homology) out = cmd_homology(doc);
      if (*cover) out = cmd_cover(doc, parse_index_list(gamma_text, "--gamma"), parse_index_list(alpha_text, "--alpha"), dot_path);
      if (*torsion) out = cmd_torsion(doc);
      if (*tropical) out = cmd_tropical(doc, r, mode);
    }
    std::cout << (as_json ? out.report.serialize() + "\n" : out.text);
    return out.counterexample ? kExitCounterexample : 0;
  } catch (const wg::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const wg::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
