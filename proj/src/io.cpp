#include "vexil/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "vexil/order.hpp"

namespace vexil {

namespace {

void require(bool ok, const std::string &msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Json boxes_json(const std::vector<Box> &boxes) {
  Json arr = Json::array();
  for (const Box &b : boxes) arr.push_back(Json::array({b.row, b.col}));
  return arr;
}

Box box_from_json(const Json &j) {
  require(j.is_array() && j.size() == 2, "box must be a [row, col] pair");
  return Box{j[0].get<int>(), j[1].get<int>()};
}

std::string var_latex(VarId v) {
  switch (v.kind()) {
    case VarKind::X:
      return "x_{" + std::to_string(v.index()) + "}";
    case VarKind::Y:
      return "y_{" + std::to_string(v.index()) + "}";
    case VarKind::Z:
      return "z_{" + std::to_string(v.row()) + "," + std::to_string(v.col()) + "}";
    default:
      return "t_{" + std::to_string(v.index()) + "}";
  }
}

Monomial parse_monomial(const std::string &s) {
  Poly f = Poly::parse(s);
  require(f.terms().size() == 1 && f.terms().begin()->second == Rat(1),
          "expected a plain monomial: " + s);
  return f.terms().begin()->first;
}

std::string trimmed(const std::string &line) {
  size_t b = 0, e = line.size();
  while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
  return line.substr(b, e - b);
}

}  // namespace

Perm parse_perm_text(const std::string &s) {
  std::istringstream in(s);
  std::vector<int> w;
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception &) {
      require(false, "permutation entries must be integers: " + tok);
    }
    require(used == tok.size(), "permutation entries must be integers: " + tok);
    w.push_back(v);
  }
  require(!w.empty(), "empty permutation");
  return Perm(w);
}

Json perm_json(const Perm &p) {
  Json j;
  j["one_line"] = p.one_line();
  return j;
}

Perm perm_from_json(const Json &j) {
  require(j.contains("one_line") && j["one_line"].is_array(), "missing one_line array");
  return Perm(j["one_line"].get<std::vector<int>>());
}

Json perm_info_json(const Perm &p) {
  Json j;
  j["one_line"] = p.one_line();
  j["n"] = p.n();
  j["length"] = p.length();
  j["diagram"] = boxes_json(p.diagram());
  j["essential"] = boxes_json(p.essential());
  j["lambda"] = p.lambda();
  j["mu"] = p.mu();
  j["vexillary"] = p.is_vexillary();
  if (p.is_vexillary()) j["flag"] = p.flag();
  j["dominant"] = p.is_dominant();
  j["grassmannian"] = p.is_grassmannian();
  return j;
}

Json poly_json(const Poly &f) {
  Json terms = Json::array();
  for (const auto &[m, c] : f.terms()) {
    Json t;
    t["coef"] = c.get_str();
    t["mono"] = m.str();
    terms.push_back(t);
  }
  Json j;
  j["terms"] = terms;
  return j;
}

Poly poly_from_json(const Json &j) {
  require(j.contains("terms") && j["terms"].is_array(), "missing terms array");
  Poly out;
  for (const Json &t : j["terms"]) {
    Rat c(t.at("coef").get<std::string>());
    c.canonicalize();
    out += Poly(parse_monomial(t.at("mono").get<std::string>()), c);
  }
  return out;
}

std::string latex(const Monomial &m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto &[v, e] : m.entries()) {
    if (!out.empty()) out += " ";
    out += var_latex(v);
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string latex(const Poly &f) {
  if (f.is_zero()) return "0";
  // Same canonical term order as the text rendering.
  TermOrder ord = TermOrder::canonical();
  std::vector<std::pair<Monomial, Rat>> ts(f.terms().begin(), f.terms().end());
  std::sort(ts.begin(), ts.end(),
            [&](const auto &a, const auto &b) { return ord.greater(a.first, b.first); });
  std::string out;
  for (const auto &[m, c] : ts) {
    Rat mag = c < 0 ? Rat(-c) : c;
    std::string body;
    if (m.is_one())
      body = mag.get_str();
    else if (mag == 1)
      body = latex(m);
    else
      body = mag.get_str() + " " + latex(m);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

Json monomial_ideal_json(const MonomialIdeal &I) {
  Json arr = Json::array();
  for (const Monomial &m : I.gens()) arr.push_back(m.str());
  Json j;
  j["generators"] = arr;
  return j;
}

MonomialIdeal monomial_ideal_from_json(const Json &j) {
  require(j.contains("generators") && j["generators"].is_array(), "missing generators array");
  std::vector<Monomial> gens;
  for (const Json &g : j["generators"]) gens.push_back(parse_monomial(g.get<std::string>()));
  return MonomialIdeal(gens);
}

std::string ideal_file_text(const IdealFile &f) {
  std::ostringstream out;
  out << "ring: x1..x" << f.ring.nx << " y1..y" << f.ring.ny << " z " << f.ring.zn << "\n";
  for (const Poly &g : f.gens) out << g.str() << "\n";
  return out.str();
}

IdealFile parse_ideal_file(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  bool have_ring = false;
  RingDecl ring;
  std::vector<Poly> gens;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trimmed(line);
    if (line.empty()) continue;
    if (!have_ring) {
      int nx = -1, ny = -1, zn = -1;
      require(std::sscanf(line.c_str(), "ring: x1..x%d y1..y%d z %d", &nx, &ny, &zn) == 3 &&
                  nx >= 0 && ny >= 0 && zn >= 0,
              "first line must declare ring: x1..xk y1..ym z n");
      ring = RingDecl{nx, ny, zn};
      have_ring = true;
      continue;
    }
    gens.push_back(Poly::parse(line));
  }
  require(have_ring, "missing ring header");
  for (const Poly &g : gens)
    for (VarId v : g.support()) {
      bool inside = (v.kind() == VarKind::X && v.index() <= ring.nx) ||
                    (v.kind() == VarKind::Y && v.index() <= ring.ny) ||
                    (v.kind() == VarKind::Z && v.row() <= ring.zn && v.col() <= ring.zn);
      require(inside, "generator uses a variable outside the declared ring");
    }
  return IdealFile{ring, gens};
}

Json pipedream_json(const PipeDream &pd) {
  Json j;
  j["k"] = pd.rows;
  j["N"] = pd.cols;
  j["crosses"] = boxes_json({pd.crosses.begin(), pd.crosses.end()});
  return j;
}

PipeDream pipedream_from_json(const Json &j) {
  PipeDream pd;
  pd.rows = j.at("k").get<int>();
  pd.cols = j.at("N").get<int>();
  require(pd.rows >= 0 && pd.cols >= 0, "grid sizes must be nonnegative");
  require(j.contains("crosses") && j["crosses"].is_array(), "missing crosses array");
  for (const Json &c : j["crosses"]) {
    Box b = box_from_json(c);
    require(b.row >= 1 && b.row <= pd.rows && b.col >= 1 && b.col <= pd.cols,
            "cross outside the grid");
    pd.crosses.insert(b);
  }
  return pd;
}

Json tableau_json(const SetValuedTableau &t) {
  Json rows = Json::array();
  for (size_t i = 0; i < t.shape.size(); ++i) {
    Json row = Json::array();
    for (int c = 1; c <= t.shape[i]; ++c)
      row.push_back(Json(t.at(static_cast<int>(i) + 1, c)));
    rows.push_back(row);
  }
  Json j;
  j["shape"] = t.shape;
  j["rows"] = rows;
  return j;
}

SetValuedTableau tableau_from_json(const Json &j) {
  SetValuedTableau t;
  require(j.contains("shape") && j["shape"].is_array(), "missing shape array");
  t.shape = j["shape"].get<std::vector<int>>();
  for (size_t i = 0; i < t.shape.size(); ++i) {
    require(t.shape[i] >= 1, "shape parts must be positive");
    require(i == 0 || t.shape[i - 1] >= t.shape[i], "shape must weakly decrease");
  }
  require(j.contains("rows") && j["rows"].is_array() && j["rows"].size() == t.shape.size(),
          "rows must match the shape");
  for (size_t i = 0; i < t.shape.size(); ++i) {
    const Json &row = j["rows"][i];
    require(row.is_array() && static_cast<int>(row.size()) == t.shape[i],
            "row length must match the shape part");
    for (int c = 1; c <= t.shape[i]; ++c) {
      auto vals = row[c - 1].get<std::set<int>>();
      require(!vals.empty(), "tableau entries must be nonempty sets");
      t.cells[Box{static_cast<int>(i) + 1, c}] = vals;
    }
  }
  return t;
}

std::string tableau_latex(const SetValuedTableau &t) {
  std::string body;
  for (size_t i = 0; i < t.shape.size(); ++i) {
    if (i) body += " \\\\ ";
    for (int c = 1; c <= t.shape[i]; ++c) {
      if (c > 1) body += " & ";
      std::string cell;
      for (int v : t.at(static_cast<int>(i) + 1, c)) {
        if (!cell.empty()) cell += ",";
        cell += std::to_string(v);
      }
      body += cell;
    }
  }
  return "\\tableau{" + body + "}";
}

Json gb_verdict_json(const Perm &p, const DiagonalGBVerdict &v,
                     const std::optional<MonomialIdeal> &initial) {
  Json j;
  j["perm"] = p.one_line();
  j["vexillary"] = v.vexillary;
  j["diagonal_gb"] = v.is_gb;
  if (!v.is_gb) {
    Json w;
    w["i"] = v.witness.i;
    w["j"] = v.witness.j;
    w["spair"] = v.witness.spair.str();
    w["remainder"] = v.witness.remainder.str();
    j["witness_spair"] = w;
  }
  if (initial) j["initial_ideal"] = monomial_ideal_json(*initial)["generators"];
  return j;
}

Json gvd_trace_json(const GvdTrace &tr) {
  Json steps = Json::array();
  for (const SchubertStep &st : tr.steps) {
    Json s;
    s["box"] = Json::array({st.box.row, st.box.col});
    s["perm_P"] = st.pi_P.one_line();
    s["perm_C"] = st.pi_C.one_line();
    s["is_gvd"] = st.split.is_gvd;
    s["hilbert_equal"] = st.hilbert_equal;
    steps.push_back(s);
  }
  Json j;
  j["steps"] = steps;
  Json fin;
  fin["monomial_ideal"] = monomial_ideal_json(tr.final_monomial)["generators"];
  j["final"] = fin;
  return j;
}

Json certificate_json(const SharpnessCertificate &c) {
  Json j;
  j["perm"] = c.perm.one_line();
  j["length"] = c.length;
  j["poison_crosses"] = boxes_json(c.poison_crosses);
  j["codim"] = c.codim;
  return j;
}

}  // namespace vexil
