// dmtool: load one fixture file, run one computation, print the answer.
//
// Output is a short text form by default; --json switches to a single JSON
// object {"result": ..., "warnings": [...]}.  Warnings go to stderr in text
// mode.  Exit status: 0 on success, 1 when the input fails validation (or a
// capacity cap), 2 on usage errors.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dm/bicycle.hpp"
#include "dm/error.hpp"
#include "dm/io.hpp"
#include "dm/matroid.hpp"
#include "dm/setsys.hpp"
#include "dm/transition.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace dm;

struct Input {
  InputKind kind;
  std::optional<SquareMatrix> matrix;
  std::optional<SetSystem> system;
  std::optional<Matroid> matroid;  // .mat bases, or the graphic matroid of .g
  std::optional<Graph> graph;
};

Input load(const std::string& path) {
  Input in;
  in.kind = kind_from_path(path);
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  switch (in.kind) {
    case InputKind::Matrix: in.matrix = parse_matrix(f); break;
    case InputKind::SetSystem: in.system = parse_set_system(f); break;
    case InputKind::Matroid: in.matroid = parse_matroid(f); break;
    case InputKind::Multigraph: in.matroid = graphic(parse_multigraph(f)); break;
    case InputKind::Graph: in.graph = parse_graph(f); break;
  }
  return in;
}

SetSystem as_set_system(const Input& in) {
  switch (in.kind) {
    case InputKind::Matrix: return matrix_delta_matroid(*in.matrix);
    case InputKind::SetSystem: return *in.system;
    case InputKind::Graph: return in.graph->delta_matroid();
    default: return in.matroid->bases();
  }
}

// Matroid commands accept any input whose set system validates as bases.
Matroid as_matroid(const Input& in) {
  if (in.matroid) return *in.matroid;
  return Matroid::from_bases(as_set_system(in));
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

// "*{1 2} +{3} ~{4 5} \{6}", applied left to right.
std::vector<Op> parse_opword(const std::string& s) {
  std::vector<Op> ops;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    OpKind kind;
    switch (s[i]) {
      case '*': kind = OpKind::Twist; break;
      case '+': kind = OpKind::LoopC; break;
      case '~': kind = OpKind::DualPivot; break;
      case '\\': kind = OpKind::Delete; break;
      default:
        throw Error(std::string("bad operation '") + s[i] +
                    "' in opword (expected *, +, ~ or \\)");
    }
    ++i;
    skip_ws();
    if (i >= s.size() || s[i] != '{') {
      throw Error("expected '{...}' after operation in opword");
    }
    size_t close = s.find('}', ++i);
    if (close == std::string::npos) throw Error("unterminated '{' in opword");
    std::istringstream inner(s.substr(i, close - i));
    Op op{kind, {}};
    std::string tok;
    while (inner >> tok) op.labels.push_back(tok);
    ops.push_back(std::move(op));
    i = close + 1;
    skip_ws();
  }
  return ops;
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw Error("bad rational '" + s + "'");
  }
}

json poly_json(const Poly& p) {
  json coeffs = json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(c.str());
  return json{{"pretty", p.pretty()}, {"coeffs", std::move(coeffs)}};
}

json tutte_json(const TuttePoly& t) {
  json grid = json::array();
  for (const auto& row : t.grid()) {
    json r = json::array();
    for (const Rational& c : row) r.push_back(c.str());
    grid.push_back(std::move(r));
  }
  return json{{"pretty", t.pretty()}, {"coeffs", std::move(grid)}};
}

// "-" stands for the empty class.
std::string label_run(const GroundSet& g, Mask m) {
  if (!m) return "-";
  std::string out;
  for_each_bit(m, [&](size_t i) {
    if (!out.empty()) out += ' ';
    out += g.label(i);
  });
  return out;
}

json label_array(const GroundSet& g, Mask m) {
  json out = json::array();
  for_each_bit(m, [&](size_t i) { out.push_back(g.label(i)); });
  return out;
}

struct Report {
  bool json_mode = false;
  std::vector<std::string> lines;     // stdout, one per line
  std::vector<std::string> warnings;  // stderr in text mode
  json result;

  void flush() const {
    if (json_mode) {
      std::cout << json{{"result", result}, {"warnings", warnings}}.dump()
                << "\n";
      return;
    }
    for (const auto& l : lines) std::cout << l << "\n";
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact delta-matroid calculus"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode,
               "emit one JSON object {result, warnings} on stdout");

  std::string file, what, opword, method = "direct", basis, relative;
  std::string wa, wb, wc;
  bool generalized = false;

  auto* c_check = app.add_subcommand("check", "test a named property");
  c_check->add_option("property", what, "property to test")
      ->required()
      ->check(CLI::IsMember({"delta-matroid", "vf-safe", "eulerian", "bipartite"}));
  c_check->add_option("file", file, "input file")->required();
  c_check->add_flag("--generalized", generalized,
                    "use the loop-complementation form on matroid input");

  auto* c_apply = app.add_subcommand("apply", "apply an operation word");
  c_apply->add_option("opword", opword, "word like \"*{1 2} +{3} \\{4}\"")
      ->required();
  c_apply->add_option("file", file, "input file")->required();

  auto* c_penrose = app.add_subcommand("penrose", "Penrose polynomial");
  c_penrose->add_option("file", file, "input file")->required();
  c_penrose->add_option("--method", method, "direct | recursive | fundamental")
      ->check(CLI::IsMember({"direct", "recursive", "fundamental"}));
  c_penrose->add_option("--basis", basis,
                        "comma-separated basis for --method fundamental");

  auto* c_p1 = app.add_subcommand("p1", "twist polynomial p_1");
  c_p1->add_option("file", file, "input file")->required();

  auto* c_trans = app.add_subcommand("transition", "weighted transition polynomial");
  c_trans->add_option("file", file, "input file")->required();
  c_trans->add_option("-a", wa, "weight a")->required();
  c_trans->add_option("-b", wb, "weight b")->required();
  c_trans->add_option("-c", wc, "weight c")->required();

  auto* c_tutte = app.add_subcommand("tutte", "Tutte polynomial of a matroid");
  c_tutte->add_option("file", file, "input file")->required();

  auto* c_tri = app.add_subcommand("tripartition", "principal tripartition");
  c_tri->add_option("file", file, "input file")->required();

  auto* c_bic = app.add_subcommand("bicycle", "bicycle matroid and dimension");
  c_bic->add_option("file", file, "input file")->required();
  c_bic->add_option("--relative", relative, "comma-separated subset Y (default V)");

  auto* c_eval = app.add_subcommand("eval", "evaluation-identity report");
  c_eval->add_option("file", file, "input file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report rep;
  rep.json_mode = json_mode;
  int status = 0;

  try {
    Input in = load(file);

    if (app.got_subcommand(c_check)) {
      bool value = false;
      if (what == "delta-matroid") {
        value = as_set_system(in).is_delta_matroid();
      } else if (what == "vf-safe") {
        SetSystem S = as_set_system(in);
        if (S.ground().size() > 10) {
          rep.warnings.push_back("vf-safety scans 3^|V| twisted systems; this may take a while");
        }
        value = S.is_vf_safe();
      } else if (what == "eulerian") {
        if (!generalized && in.matroid) {
          value = is_eulerian(*in.matroid);
        } else {
          value = is_eulerian_gen(as_set_system(in));
        }
      } else {
        if (!generalized && in.matroid) {
          value = is_bipartite(*in.matroid);
        } else {
          value = is_bipartite_gen(as_set_system(in));
        }
      }
      rep.lines.push_back(what + ": " + (value ? "yes" : "no"));
      rep.result = value;
    } else if (app.got_subcommand(c_apply)) {
      SetSystem out = apply_sequence(as_set_system(in), parse_opword(opword));
      std::string doc = write_set_system(out);
      if (!doc.empty() && doc.back() == '\n') doc.pop_back();
      rep.lines.push_back(doc);
      rep.result = doc;
    } else if (app.got_subcommand(c_penrose)) {
      Poly P;
      if (method == "fundamental") {
        Matroid M = as_matroid(in);
        Mask Z = basis.empty() ? M.bases().family().front()
                               : M.ground().subset(split_commas(basis));
        P = penrose_fundamental(M, Z);
      } else if (method == "recursive") {
        P = penrose_recursive(as_set_system(in));
      } else {
        P = penrose_direct(as_set_system(in));
      }
      rep.lines.push_back(P.pretty());
      rep.result = poly_json(P);
    } else if (app.got_subcommand(c_p1)) {
      Poly P = in.graph ? p1_graph_direct(*in.graph) : p1(as_set_system(in));
      rep.lines.push_back(P.pretty());
      rep.result = poly_json(P);
    } else if (app.got_subcommand(c_trans)) {
      TransitionWeights w{parse_rational(wa), parse_rational(wb),
                          parse_rational(wc)};
      Poly Q = transition_direct(as_set_system(in), w);
      rep.lines.push_back(Q.pretty());
      rep.result = poly_json(Q);
    } else if (app.got_subcommand(c_tutte)) {
      TuttePoly t = tutte(as_matroid(in));
      rep.lines.push_back(t.pretty());
      rep.result = tutte_json(t);
    } else if (app.got_subcommand(c_tri)) {
      SetSystem S = as_set_system(in);
      Tripartition t = tripartition(S);
      const GroundSet& g = S.ground();
      rep.lines.push_back("P: " + label_run(g, t.P) + "  Q: " + label_run(g, t.Q) +
                          "  R: " + label_run(g, t.R));
      rep.result = json{{"P", label_array(g, t.P)},
                        {"Q", label_array(g, t.Q)},
                        {"R", label_array(g, t.R)}};
    } else if (app.got_subcommand(c_bic)) {
      SetSystem S = as_set_system(in);
      Mask Y = relative.empty() ? S.ground().full()
                                : S.ground().subset(split_commas(relative));
      Matroid B = bicycle_matroid(S, Y);
      int dim = bicycle_dimension(S, Y);
      std::string bases;
      json jb = json::array();
      for (Mask b : B.bases().family()) {
        if (!bases.empty()) bases += ", ";
        bases += S.ground().subset_string(b);
        jb.push_back(label_array(S.ground(), b));
      }
      rep.lines.push_back("dimension: " + std::to_string(dim) +
                          "  bases: " + bases);
      rep.result = json{{"dimension", dim}, {"bases", std::move(jb)}};
    } else if (app.got_subcommand(c_eval)) {
      std::vector<EvalCheck> checks = penrose_evaluations(as_set_system(in));
      json items = json::array();
      for (const EvalCheck& c : checks) {
        std::string st = c.status == EvalCheck::Status::Pass      ? "pass"
                         : c.status == EvalCheck::Status::Fail    ? "fail"
                                                                  : "skipped";
        std::string line = c.name + ": " + st;
        if (!c.detail.empty()) line += " (" + c.detail + ")";
        rep.lines.push_back(line);
        items.push_back(json{{"name", c.name}, {"status", st}, {"detail", c.detail}});
        if (c.status == EvalCheck::Status::Skipped) {
          rep.warnings.push_back("skipped " + c.name + ": " + c.detail);
        }
        if (c.status == EvalCheck::Status::Fail) status = 1;
      }
      rep.result = std::move(items);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  rep.flush();
  return status;
}
