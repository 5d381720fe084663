#pragma once

#include <iosfwd>
#include <string>

#include "macloops/decomposition.hpp"
#include "macloops/rational_function.hpp"
#include "macloops/simplicial_complex.hpp"

namespace macloops {

// The canonical wire format shared by every tool entry point:
//   complex            {"m": int, "facets": [[int,...],...]}
//   rational function  {"num": [c0,c1,...], "den": [c0,c1,...]}
//   decomposition      {"simplex": [...], "boundaries": [[...],...]}
//   witness            {"I": [...], "J": [...], "k":, "t":, "r":,
//                       "spheres": [d1,d2], "bound": {"lhs":, "rhs":}}
// Writers emit compact JSON with a fixed key order so identical values
// always serialize to identical bytes. Malformed input raises ParseError;
// structurally valid input with bad vertex data raises the module errors.

SimplicialComplex parse_complex_json(const std::string& text,
                                     GhostPolicy policy = GhostPolicy::Reject);
RationalFunction parse_rational_function_json(const std::string& text);
JoinDecomposition parse_decomposition_json(const std::string& text);

std::string complex_to_json(const SimplicialComplex& K);
std::string rational_function_to_json(const RationalFunction& f);
std::string decomposition_to_json(const JoinDecomposition& d);
std::string witness_to_json(const WedgeWitness& w);
std::string coefficients_to_json(const std::vector<mpz_class>& coefficients);
std::string face_set_to_json(const FaceSet& s);

}  // namespace macloops
