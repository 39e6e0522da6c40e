#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vexil/detideal.hpp"
#include "vexil/gvd.hpp"
#include "vexil/ideal.hpp"
#include "vexil/perm.hpp"
#include "vexil/poison.hpp"
#include "vexil/subword.hpp"
#include "vexil/tableaux.hpp"

namespace vexil {

using Json = nlohmann::ordered_json;

// Permutations: whitespace-separated one-line text, {"one_line":[...]} JSON,
// and a full info document (diagram, essential set, shapes, classification).
Perm parse_perm_text(const std::string &s);
Json perm_json(const Perm &p);
Perm perm_from_json(const Json &j);
Json perm_info_json(const Perm &p);

// Polynomials: exact term lists {"terms":[{"coef":..,"mono":..},...]} and a
// LaTeX rendering with subscripted variables.
Json poly_json(const Poly &f);
Poly poly_from_json(const Json &j);
std::string latex(const Monomial &m);
std::string latex(const Poly &f);

// Monomial ideals as sorted generator lists.
Json monomial_ideal_json(const MonomialIdeal &I);
MonomialIdeal monomial_ideal_from_json(const Json &j);

// Ideal files: a `ring: x1..xk y1..ym z n` header, then one generator per
// line in the polynomial grammar; `#` starts a comment.
struct IdealFile {
  RingDecl ring;
  std::vector<Poly> gens;
  friend bool operator==(const IdealFile &, const IdealFile &) = default;
};
std::string ideal_file_text(const IdealFile &f);
IdealFile parse_ideal_file(const std::string &text);

// Pipe dreams: {"k":rows,"N":cols,"crosses":[[r,c],...]}.
Json pipedream_json(const PipeDream &pd);
PipeDream pipedream_from_json(const Json &j);

// Tableaux: {"shape":[...],"rows":[[[entries],...],...]} and the LaTeX
// \tableau{...} display with comma-separated set entries.
Json tableau_json(const SetValuedTableau &t);
SetValuedTableau tableau_from_json(const Json &j);
std::string tableau_latex(const SetValuedTableau &t);

// Report documents.
Json gb_verdict_json(const Perm &p, const DiagonalGBVerdict &v,
                     const std::optional<MonomialIdeal> &initial);
Json gvd_trace_json(const GvdTrace &tr);
Json certificate_json(const SharpnessCertificate &c);

}  // namespace vexil
