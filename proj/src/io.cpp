#include "dm/io.hpp"

#include <istream>
#include <optional>
#include <sstream>

#include "dm/error.hpp"

namespace dm {

namespace {

struct Line {
  int no;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line l{no, {}};
    std::string t;
    while (ss >> t) l.tokens.push_back(t);
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::string> args_of(const Line& l) {
  return {l.tokens.begin() + 1, l.tokens.end()};
}

GroundSet ground_line(const Line& l, const char* directive) {
  if (l.tokens.size() < 2)
    throw ParseError(l.no, std::string(directive) + " needs at least one label");
  try {
    return GroundSet(args_of(l));
  } catch (const Error& e) {
    throw ParseError(l.no, e.what());
  }
}

Mask subset_line(const Line& l, const GroundSet& g) {
  // "-" as the only argument denotes the empty subset
  if (l.tokens.size() == 2 && l.tokens[1] == "-") return 0;
  Mask m = 0;
  for (size_t i = 1; i < l.tokens.size(); ++i) {
    try {
      m |= g.bit(l.tokens[i]);
    } catch (const Error& e) {
      throw ParseError(l.no, e.what());
    }
  }
  return m;
}

struct FamilyFile {
  GroundSet ground;
  std::vector<Mask> members;
};

FamilyFile parse_family(std::istream& in, const char* member_directive) {
  std::optional<GroundSet> ground;
  std::vector<Mask> members;
  for (const Line& l : tokenize(in)) {
    const std::string& d = l.tokens[0];
    if (d == "elements") {
      if (ground) throw ParseError(l.no, "duplicate elements line");
      ground = ground_line(l, "elements");
    } else if (d == member_directive) {
      if (!ground) throw ParseError(l.no, "elements line must come first");
      if (l.tokens.size() < 2)
        throw ParseError(l.no, std::string(member_directive) +
                                   " needs labels or - for the empty set");
      members.push_back(subset_line(l, *ground));
    } else {
      throw ParseError(l.no, "unknown directive '" + d + "'");
    }
  }
  if (!ground) throw ValidationError("missing elements line");
  return {*ground, std::move(members)};
}

}  // namespace

SquareMatrix parse_matrix(std::istream& in) {
  std::optional<Field> field;
  std::optional<GroundSet> ground;
  std::optional<SquareMatrix> a;
  std::vector<bool> seen;
  for (const Line& l : tokenize(in)) {
    const std::string& d = l.tokens[0];
    if (d == "field") {
      if (field) throw ParseError(l.no, "duplicate field line");
      if (l.tokens.size() != 2 || (l.tokens[1] != "gf2" && l.tokens[1] != "gf4"))
        throw ParseError(l.no, "field must be gf2 or gf4");
      field = l.tokens[1] == "gf2" ? Field::Gf2 : Field::Gf4;
    } else if (d == "elements") {
      if (ground) throw ParseError(l.no, "duplicate elements line");
      ground = ground_line(l, "elements");
    } else if (d == "row") {
      if (!field) throw ParseError(l.no, "field line must come before rows");
      if (!ground) throw ParseError(l.no, "elements line must come before rows");
      if (!a) {
        a.emplace(*field, *ground);
        seen.assign(ground->size(), false);
      }
      if (l.tokens.size() != ground->size() + 2)
        throw ParseError(l.no, "row needs a label and " +
                                   std::to_string(ground->size()) + " entries");
      try {
        size_t i = ground->index(l.tokens[1]);
        if (seen[i]) throw Error("duplicate row " + l.tokens[1]);
        seen[i] = true;
        for (size_t j = 0; j < ground->size(); ++j)
          a->set(i, j, from_token(l.tokens[j + 2]));
      } catch (const Error& e) {
        throw ParseError(l.no, e.what());
      }
    } else {
      throw ParseError(l.no, "unknown directive '" + d + "'");
    }
  }
  if (!field) throw ValidationError("missing field line");
  if (!ground) throw ValidationError("missing elements line");
  if (!a) a.emplace(*field, *ground), seen.assign(ground->size(), false);
  for (size_t i = 0; i < ground->size(); ++i)
    if (!seen[i]) throw ValidationError("missing row " + ground->label(i));
  return *a;
}

std::string write_matrix(const SquareMatrix& A) {
  std::ostringstream os;
  os << "field " << field_name(A.field()) << "\nelements";
  for (const auto& l : A.ground().labels()) os << ' ' << l;
  os << '\n';
  for (size_t i = 0; i < A.n(); ++i) {
    os << "row " << A.ground().label(i);
    for (size_t j = 0; j < A.n(); ++j) os << ' ' << to_token(A.at(i, j));
    os << '\n';
  }
  return os.str();
}

SetSystem parse_set_system(std::istream& in) {
  FamilyFile f = parse_family(in, "set");
  return SetSystem(std::move(f.ground), std::move(f.members));
}

std::string write_set_system(const SetSystem& M) {
  std::ostringstream os;
  os << "elements";
  for (const auto& l : M.ground().labels()) os << ' ' << l;
  os << '\n';
  for (Mask m : M.family()) {
    os << "set";
    if (!m) {
      os << " -";
    } else {
      for (const auto& l : M.ground().labels_of(m)) os << ' ' << l;
    }
    os << '\n';
  }
  return os.str();
}

Matroid parse_matroid(std::istream& in) {
  FamilyFile f = parse_family(in, "basis");
  return Matroid::from_bases(SetSystem(std::move(f.ground), std::move(f.members)));
}

std::string write_matroid(const Matroid& M) {
  std::ostringstream os;
  os << "elements";
  for (const auto& l : M.ground().labels()) os << ' ' << l;
  os << '\n';
  for (Mask m : M.bases().family()) {
    os << "basis";
    if (!m) {
      os << " -";
    } else {
      for (const auto& l : M.ground().labels_of(m)) os << ' ' << l;
    }
    os << '\n';
  }
  return os.str();
}

Multigraph parse_multigraph(std::istream& in) {
  Multigraph g;
  bool have_vertices = false;
  std::vector<std::string> edge_labels;
  for (const Line& l : tokenize(in)) {
    const std::string& d = l.tokens[0];
    if (d == "vertices") {
      if (have_vertices) throw ParseError(l.no, "duplicate vertices line");
      if (l.tokens.size() < 2) throw ParseError(l.no, "vertices needs at least one label");
      g.vertices = args_of(l);
      have_vertices = true;
    } else if (d == "edge") {
      if (!have_vertices) throw ParseError(l.no, "vertices line must come first");
      if (l.tokens.size() != 4)
        throw ParseError(l.no, "edge needs a label and two endpoints");
      const std::string &label = l.tokens[1], &u = l.tokens[2], &v = l.tokens[3];
      for (const auto& e : edge_labels)
        if (e == label) throw ParseError(l.no, "duplicate edge label " + label);
      for (const auto& ep : {u, v}) {
        bool known = false;
        for (const auto& w : g.vertices) known = known || w == ep;
        if (!known) throw ParseError(l.no, "endpoint '" + ep + "' is not a declared vertex");
      }
      edge_labels.push_back(label);
      g.edges.push_back({label, u, v});
    } else {
      throw ParseError(l.no, "unknown directive '" + d + "'");
    }
  }
  if (!have_vertices) throw ValidationError("missing vertices line");
  return g;
}

std::string write_multigraph(const Multigraph& g) {
  std::ostringstream os;
  os << "vertices";
  for (const auto& v : g.vertices) os << ' ' << v;
  os << '\n';
  for (const auto& e : g.edges) os << "edge " << e.label << ' ' << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph(std::istream& in) {
  std::optional<GroundSet> ground;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> loops;
  for (const Line& l : tokenize(in)) {
    const std::string& d = l.tokens[0];
    if (d == "vertices") {
      if (ground) throw ParseError(l.no, "duplicate vertices line");
      ground = ground_line(l, "vertices");
    } else if (d == "edge") {
      if (!ground) throw ParseError(l.no, "vertices line must come first");
      if (l.tokens.size() != 3) throw ParseError(l.no, "edge needs two endpoints");
      if (l.tokens[1] == l.tokens[2])
        throw ParseError(l.no, "equal endpoints; use a loop line");
      for (size_t i = 1; i <= 2; ++i)
        if (!ground->has_label(l.tokens[i]))
          throw ParseError(l.no, "endpoint '" + l.tokens[i] + "' is not a declared vertex");
      edges.emplace_back(l.tokens[1], l.tokens[2]);
    } else if (d == "loop") {
      if (!ground) throw ParseError(l.no, "vertices line must come first");
      if (l.tokens.size() != 2) throw ParseError(l.no, "loop needs one vertex");
      if (!ground->has_label(l.tokens[1]))
        throw ParseError(l.no, "vertex '" + l.tokens[1] + "' is not declared");
      loops.push_back(l.tokens[1]);
    } else {
      throw ParseError(l.no, "unknown directive '" + d + "'");
    }
  }
  if (!ground) throw ValidationError("missing vertices line");
  return Graph::from_lists(*ground, edges, loops);
}

std::string write_graph(const Graph& G) {
  std::ostringstream os;
  os << "vertices";
  for (const auto& v : G.vertices().labels()) os << ' ' << v;
  os << '\n';
  for (size_t i = 0; i < G.n(); ++i)
    for (size_t j = i + 1; j < G.n(); ++j)
      if (G.has_edge(i, j))
        os << "edge " << G.vertices().label(i) << ' ' << G.vertices().label(j) << '\n';
  for (size_t i = 0; i < G.n(); ++i)
    if (G.has_loop(i)) os << "loop " << G.vertices().label(i) << '\n';
  return os.str();
}

InputKind kind_from_path(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "m2" || ext == "m4") return InputKind::Matrix;
  if (ext == "ss") return InputKind::SetSystem;
  if (ext == "mat") return InputKind::Matroid;
  if (ext == "g") return InputKind::Multigraph;
  if (ext == "gr") return InputKind::Graph;
  throw ValidationError("unrecognized input extension '" + ext +
                        "' (expected m2, m4, ss, mat, g or gr)");
}

}  // namespace dm
