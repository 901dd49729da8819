#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "pjp/jacobi.hpp"
#include "pjp/mvop.hpp"
#include "pjp/parabolic.hpp"
#include "pjp/vectorize.hpp"

namespace pjp {

using Json = nlohmann::ordered_json;

// --- JSON ------------------------------------------------------------------
// All decoders throw Error(InvalidInput) on malformed documents.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const RootSystem& rs);
RootSystemPtr root_system_from_json(const Json& j);

// 1-based indices
Json subset_to_json(Subset I, int rank);
Subset subset_from_json(const Json& j, int rank);

// a single "p/q" when uniform, else one string per root orbit
Json to_json(const Multiplicity& k);
Multiplicity multiplicity_from_json(const Json& j, const RootSystem& rs);

Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j, const RootSystemPtr& rs);

Json weyl_to_json(const RootSystem& rs, int w);
int weyl_from_json(const Json& j, const RootSystem& rs);

Json to_json(const SpectralVector& s);

struct EPolyResult {
  RootSystemPtr rs;
  Weight label;
  Multiplicity k;
  LaurentPoly poly;
  RVec spectral;
  bool operator==(const EPolyResult& o) const {
    return rs->same_as(*o.rs) && label == o.label && k == o.k && poly == o.poly && spectral == o.spectral;
  }
};
Json to_json(const EPolyResult& e);
EPolyResult epoly_from_json(const Json& j);

Json to_json(const JacobiPoly& p);
JacobiPoly jacobi_from_json(const Json& j);
bool same_jacobi(const JacobiPoly& a, const JacobiPoly& b);

Json to_json(const VectorPoly& v);
VectorPoly vector_from_json(const Json& j);

Json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j, const RootSystemPtr& rs);
Json to_json(const MatrixRatOp& m);
MatrixRatOp matrix_op_from_json(const Json& j);

Json to_json(const ChiPolynomial& p);
ChiPolynomial chi_from_json(const Json& j);
Json to_json(const ChiMatrix& m);
ChiMatrix chi_matrix_from_json(const Json& j);

// Steinberg data of (rs, I): generators, the alternative generators and the
// full W-table with membership over the given subsets.
Json steinberg_json(const RootSystemPtr& rs, Subset I, const std::vector<Subset>& table_subsets);

// --- text and LaTeX ----------------------------------------------------------

std::string weight_text(const Weight& w);  // "-w1+w2", "0"
std::string to_text(const LaurentPoly& f);  // "e^(-w1+w2) + 1/2*e^(w2)"
std::string to_text(const VectorPoly& v);
std::string to_text(const RatFunc& f);
std::string to_text(const MatrixRatOp& m);
std::string to_text(const ChiMatrix& m);

std::string weight_latex(const Weight& w);  // "-\varpi_{1}+\varpi_{2}"
std::string to_latex(const Rational& q);
std::string to_latex(const LaurentPoly& f);
std::string to_latex(const VectorPoly& v);
std::string to_latex(const RatFunc& f);
std::string to_latex(const MatrixRatOp& m);
std::string to_latex(const ChiPolynomial& p);
std::string to_latex(const ChiMatrix& m);

}  // namespace pjp
