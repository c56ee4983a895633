#include "sandwich/io.hpp"

#include <fstream>
#include <sstream>

#include "sandwich/errors.hpp"

namespace sandwich::io {

namespace {

const char* kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::integers: return "integers";
    case FactorKind::zmod: return "zmod";
    case FactorKind::poly: return "poly";
  }
  return "?";
}

const char* op_name(WordOp op) {
  switch (op) {
    case WordOp::root: return "root";
    case WordOp::torus: return "torus";
    case WordOp::weyl: return "weyl";
    case WordOp::level: return "level";
    case WordOp::input: return "input";
    case WordOp::inv: return "inv";
    case WordOp::mul: return "mul";
    case WordOp::comm: return "comm";
    case WordOp::conj: return "conj";
    case WordOp::levi: return "levi";
    case WordOp::unip: return "unip";
  }
  return "?";
}

}  // namespace

json ring_to_json(const Ring& ring) {
  json fs = json::array();
  for (const Factor& f : ring.factors()) {
    json o{{"kind", kind_name(f.kind)}};
    if (f.kind != FactorKind::integers) {
      o["p"] = f.p;
      o["k"] = f.k;
    }
    fs.push_back(o);
  }
  return {{"factors", fs}};
}

Ring ring_from_json(const json& j) {
  if (j.is_string()) return Ring::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("factors")) throw UsageError("ring must be a name or an object with \"factors\"");
  std::vector<Factor> fs;
  for (const json& f : j.at("factors")) {
    std::string kind = f.at("kind").get<std::string>();
    Factor x;
    if (kind == "integers") {
      x.kind = FactorKind::integers;
    } else if (kind == "zmod" || kind == "poly") {
      x.kind = kind == "zmod" ? FactorKind::zmod : FactorKind::poly;
      x.p = f.at("p").get<int>();
      x.k = f.at("k").get<int>();
    } else {
      throw UsageError("unknown factor kind \"" + kind + "\"");
    }
    fs.push_back(x);
  }
  return Ring(fs);
}

json elem_to_json(const RingElem& a) {
  json out = json::array();
  const auto& fs = a.ring().factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::int64_t v = a.residues().r[i];
    if (fs[i].kind != FactorKind::poly) {
      out.push_back(v);
      continue;
    }
    json coeffs = json::array();
    for (int k = 0; k < fs[i].k; ++k, v /= fs[i].p) coeffs.push_back(v % fs[i].p);
    out.push_back(coeffs);
  }
  return out;
}

RingElem elem_from_json(const Ring& ring, const json& j) {
  if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
  if (j.is_string()) return ring.parse_elem(j.get<std::string>());
  const auto& fs = ring.factors();
  if (!j.is_array() || j.size() != fs.size()) throw UsageError("element must have one entry per ring factor");
  Residues r;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const json& e = j[i];
    if (fs[i].kind == FactorKind::poly) {
      if (!e.is_array() || static_cast<int>(e.size()) > fs[i].k) throw UsageError("bad polynomial residue");
      std::int64_t v = 0, w = 1;
      for (const json& c : e) {
        std::int64_t x = ((c.get<std::int64_t>() % fs[i].p) + fs[i].p) % fs[i].p;
        v += x * w;
        w *= fs[i].p;
      }
      r.r[i] = v;
    } else {
      std::int64_t x = e.get<std::int64_t>();
      if (fs[i].kind == FactorKind::zmod) {
        std::int64_t n = fs[i].cardinality();
        x = ((x % n) + n) % n;
      }
      r.r[i] = x;
    }
  }
  return ring.elem(r);
}

json ideal_to_json(const Ideal& ideal) { return ideal.to_string(); }

json sigma_to_json(const SigmaPair& sigma) {
  return {{"plus", ideal_to_json(sigma.plus)}, {"minus", ideal_to_json(sigma.minus)}};
}

json matrix_to_json(const Model& m, const Matrix& mat) {
  json rows = json::array();
  for (int i = 0; i < mat.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < mat.dim(); ++j) row.push_back(elem_to_json(mat.elem(i, j)));
    rows.push_back(row);
  }
  return {{"case", case_tag_name(m.rs().tag())}, {"l", m.rs().rank()}, {"ring", ring_to_json(mat.ring())}, {"rows", rows}};
}

Matrix matrix_from_json(const Model& m, const json& j) {
  Ring ring = ring_from_json(j.at("ring"));
  const json& rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != m.dim())
    throw UsageError("matrix needs " + std::to_string(m.dim()) + " rows");
  Matrix mat(ring, m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != m.dim()) throw UsageError("matrix row has wrong length");
    for (int k = 0; k < m.dim(); ++k) mat.at(i, k) = elem_from_json(ring, rows[i][k]).residues();
  }
  return mat;
}

json root_to_json(const Model& m, int root) { return m.rs().root(root); }

int root_from_json(const Model& m, const json& j) {
  IVec c = j.get<IVec>();
  auto r = m.rs().find(c);
  if (!r) throw UsageError("not a root: " + j.dump());
  return *r;
}

json word_to_json(const Model& m, const Word& w) {
  json o{{"op", op_name(w->op)}};
  switch (w->op) {
    case WordOp::root:
    case WordOp::torus:
    case WordOp::weyl:
    case WordOp::level:
      o["root"] = root_to_json(m, w->root);
      o["xi"] = elem_to_json(w->xi);
      break;
    case WordOp::input:
      o["label"] = w->label;
      o["rows"] = matrix_to_json(m, *w->mat)["rows"];
      break;
    case WordOp::levi:
    case WordOp::unip:
      o["weight"] = w->weight;
      o["side"] = w->side;
      break;
    default:
      break;
  }
  if (!w->note.empty()) o["note"] = w->note;
  if (!w->args.empty()) {
    json args = json::array();
    for (const Word& a : w->args) args.push_back(word_to_json(m, a));
    o["args"] = args;
  }
  return o;
}

json witness_to_json(const Model& m, const Witness& w) {
  return {{"root", root_to_json(m, w.root)},
          {"value", elem_to_json(w.value)},
          {"route", w.route},
          {"word_size", word::size(w.word)},
          {"word", word::to_string(m, w.word)}};
}

GroupElement element_from_json(const Model& m, const Ring& ring, const json& j, const std::string& label) {
  GroupElement g = m.identity(ring);
  if (j.contains("rows")) {
    json copy = j;
    if (!copy.contains("ring")) copy["ring"] = ring_to_json(ring);
    Matrix mat = matrix_from_json(m, copy);
    if (mat.ring() != ring) throw UsageError("matrix ring differs from --ring");
    g = m.from_matrix(mat);
  } else if (j.contains("root")) {
    g = m.root_elt(root_from_json(m, j.at("root")), elem_from_json(ring, j.at("xi")));
  } else if (j.contains("word")) {
    for (const json& letter : j.at("word")) m.right_mul(g, root_from_json(m, letter.at(0)), elem_from_json(ring, letter.at(1)));
  } else {
    throw UsageError("generator needs \"rows\", \"root\" or \"word\"");
  }
  return with_word(g, word::input(label, g));
}

GroupElement generator_from_string(const Model& m, const Ring& ring, const std::string& text, const std::string& label) {
  auto colon = text.rfind(':');
  if (colon == std::string::npos) throw UsageError("generator must look like ROOT:XI, e.g. max:2");
  std::string root = text.substr(0, colon);
  RingElem xi = ring.parse_elem(text.substr(colon + 1));
  int a;
  if (root == "max") {
    a = m.rs().max_root();
  } else if (root == "-max") {
    a = m.rs().neg(m.rs().max_root());
  } else {
    IVec coeffs;
    std::stringstream ss(root);
    std::string part;
    try {
      while (std::getline(ss, part, ',')) coeffs.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("bad root: " + root);
    }
    auto found = m.rs().find(coeffs);
    if (!found) throw UsageError("not a root: " + root);
    a = *found;
  }
  GroupElement g = m.root_elt(a, xi);
  return with_word(g, word::input(label, g));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace sandwich::io
