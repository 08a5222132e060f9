#pragma once

#include <iosfwd>
#include <string>

#include "graphcx/algebra.hpp"
#include "graphcx/graph.hpp"
#include "graphcx/involution.hpp"

namespace graphcx {

// Text format: first line `V E`, then E lines `s t` (1-based, direction
// s -> t).  Validates through make_graph.
OrientedGraph read_graph_text(std::istream& in);
std::string write_graph_text(const OrientedGraph& g);

// Inline literal `V;s>t,s>t,...`.
OrientedGraph parse_graph_literal(const std::string& text);

// Accepts a literal, or a file path when the string names a readable file.
OrientedGraph load_graph_argument(const std::string& arg);

// Half-edge address `e<k>.s` / `e<k>.t`, k a 1-based edge index.
HalfEdgeRef parse_half_edge(const std::string& text, const OrientedGraph& g);

std::string render_half_edge(HalfEdgeRef h);

// One term per line, `coeff<TAB>key[<TAB>key...]`, sorted by tuple; the zero
// vector renders as `0`.
std::string render_tensor_text(const TensorVector& v);

// Array of {"coeff": c, "factors": [key...]} sorted by factor tuple.
std::string render_tensor_json(const TensorVector& v);

std::string render_certificate_text(const PairingCertificate& cert);
std::string render_certificate_json(const PairingCertificate& cert);

} // namespace graphcx
