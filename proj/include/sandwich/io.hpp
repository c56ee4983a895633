#pragma once

// JSON forms of rings, elements, matrices, words and witnesses.
//
//   ring     {"factors":[{"kind":"zmod","p":2,"k":2},{"kind":"poly","p":3,"k":2}]}
//            (a name such as "z12" or "f2t2" is accepted on input)
//   element  one entry per factor: an integer for zmod and the integers, a
//            coefficient list [c0, c1, ...] for poly
//   matrix   {"case":"c","l":7,"ring":...,"rows":[[element,...],...]}

#include <string>
#include <vector>

#include "json.hpp"
#include "sandwich/extraction.hpp"

namespace sandwich::io {

using json = nlohmann::ordered_json;

json ring_to_json(const Ring& ring);
Ring ring_from_json(const json& j);

json elem_to_json(const RingElem& a);
RingElem elem_from_json(const Ring& ring, const json& j);

json ideal_to_json(const Ideal& ideal);
json sigma_to_json(const SigmaPair& sigma);

json matrix_to_json(const Model& m, const Matrix& mat);
/// Reads the rows of a matrix file over `ring` (or the ring stored in the file).
Matrix matrix_from_json(const Model& m, const json& j);

json word_to_json(const Model& m, const Word& w);
json witness_to_json(const Model& m, const Witness& w);

/// Root given as a coefficient array over the simple roots.
int root_from_json(const Model& m, const json& j);
json root_to_json(const Model& m, int root);

/// An extra generator: {"root":[...],"xi":element}, {"word":[[root, xi], ...]}
/// or a matrix object with "rows".
GroupElement element_from_json(const Model& m, const Ring& ring, const json& j, const std::string& label);

/// "ROOT:XI" with ROOT one of max, -max or a comma-separated coefficient
/// list, e.g. "max:2" or "0,1,1,1,1,0:3".
GroupElement generator_from_string(const Model& m, const Ring& ring, const std::string& text, const std::string& label);

std::string read_file(const std::string& path);

}  // namespace sandwich::io
