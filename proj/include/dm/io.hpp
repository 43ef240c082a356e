#pragma once
// Flat-file codecs.  One directive per line, whitespace-separated tokens,
// "#" starts a comment.  Parse failures name the offending line; writers
// emit the canonical form that re-parses to an equal value.
//
//   .m2/.m4  field gf2|gf4; elements ...; row <label> <tok>...
//   .ss      elements ...; set <label>... ("set -" is the empty member)
//   .mat     elements ...; basis <label>...
//   .g       vertices ...; edge <label> <u> <v>   (u = v is a self-loop)
//   .gr      vertices ...; edge <u> <v>; loop <u>

#include <iosfwd>
#include <string>

#include "dm/graph.hpp"
#include "dm/matrix.hpp"
#include "dm/matroid.hpp"
#include "dm/setsys.hpp"

namespace dm {

SquareMatrix parse_matrix(std::istream& in);
std::string write_matrix(const SquareMatrix& A);

SetSystem parse_set_system(std::istream& in);
std::string write_set_system(const SetSystem& M);

Matroid parse_matroid(std::istream& in);  // bases are validated
std::string write_matroid(const Matroid& M);

Multigraph parse_multigraph(std::istream& in);
std::string write_multigraph(const Multigraph& g);

Graph parse_graph(std::istream& in);
std::string write_graph(const Graph& G);

enum class InputKind { Matrix, SetSystem, Matroid, Multigraph, Graph };

// Dispatch on the file extension; unknown extensions are rejected.
InputKind kind_from_path(const std::string& path);

}  // namespace dm
