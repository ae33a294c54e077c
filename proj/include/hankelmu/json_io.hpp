#pragma once

// JSON serialization of the library's value types, with fixed key order so
// identical runs produce byte-identical output.  Exact values are encoded as
// decimal strings ("-42", "3/7"); small machine integers stay numeric.

#include <string>

#include <json.hpp>

#include "hankelmu/exponent.hpp"
#include "hankelmu/hankel.hpp"
#include "hankelmu/hfrac.hpp"
#include "hankelmu/mahler.hpp"
#include "hankelmu/pade.hpp"
#include "hankelmu/sequences.hpp"

namespace hankelmu {

using ordered_json = nlohmann::ordered_json;

inline std::string elem_str(const mpz_class& v) { return v.get_str(); }
inline std::string elem_str(const mpq_class& v) {
  return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}
inline std::string elem_str(const ModInt& v) { return std::to_string(v.value()); }

template <class K>
ordered_json coeff_list(const std::vector<typename K::Elem>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(elem_str(x));
  return a;
}

template <class K>
ordered_json series_json(const TruncatedSeries<K>& f) {
  ordered_json j;
  j["ring"] = f.ring().name();
  j["coeffs"] = coeff_list<K>(f.coeffs());
  j["order"] = f.order();
  return j;
}

template <class K>
ordered_json poly_json(const Polynomial<K>& p) {
  return coeff_list<K>(p.coeffs());
}

template <class K>
ordered_json hankel_report_json(const HankelReport<K>& r, const K& ring) {
  ordered_json j;
  j["k"] = r.k;
  j["ring"] = ring.name();
  j["table"] = coeff_list<K>(r.table);
  j["nonzero_indices"] = r.nonzero_indices;
  if (r.rho_estimate)
    j["rho_estimate"] = elem_str(*r.rho_estimate);
  else
    j["rho_estimate"] = nullptr;
  j["rho_window"] = r.window;
  j["kronecker_flag"] = r.kronecker_flag;
  j["note"] =
      "kronecker_flag and rho_estimate are finite-prefix evidence, not proofs";
  return j;
}

template <class K>
ordered_json hfrac_json(const HFraction<K>& h) {
  ordered_json j;
  j["delta"] = h.delta;
  j["ring"] = h.ring.name();
  ordered_json lv = ordered_json::array();
  for (const auto& l : h.levels) {
    ordered_json e;
    e["v"] = elem_str(l.v);
    e["k"] = l.k;
    e["u"] = poly_json(l.u);
    lv.push_back(std::move(e));
  }
  j["levels"] = std::move(lv);
  j["certified_levels"] = h.certified_levels;
  j["terminated"] = h.terminated;
  j["s_indices"] = h.s_indices();
  return j;
}

template <class K>
ordered_json pade_json(const PadeApproximant<K>& a) {
  ordered_json j;
  j["k"] = a.k;
  j["P"] = poly_json(a.P);
  j["Q"] = poly_json(a.Q);
  j["H_k"] = elem_str(a.Hk);
  if (a.k_prime) {
    j["k_prime"] = *a.k_prime;
    j["h_k"] = elem_str(*a.h);
    j["leading_residual"] = elem_str(*a.bordered);
  } else {
    j["k_prime"] = nullptr;
    j["h_k"] = nullptr;
    j["leading_residual"] = nullptr;
  }
  j["contact_verified_to"] = a.contact_verified_order;
  return j;
}

inline ordered_json iterated_json(const IteratedEquation& it) {
  ordered_json j;
  j["m"] = it.m;
  j["d_pow_m"] = it.d_pow_m;
  j["A_m"] = poly_json(it.A);
  j["B_m"] = poly_json(it.B);
  j["C_m"] = poly_json(it.C);
  j["D_m"] = poly_json(it.D);
  j["deg"] = {{"A_m", it.A.degree()},
              {"B_m", it.B.degree()},
              {"C_m", it.C.degree()},
              {"D_m", it.D.degree()}};
  return j;
}

inline ordered_json approximant_json(const ExplicitApproximant& a) {
  ordered_json j;
  j["i"] = a.i;
  j["m"] = a.m;
  j["n_i"] = a.n_i;
  j["n_i_prime"] = a.n_i_prime;
  j["e_i"] = a.e;
  j["p"] = a.p.get_str();
  j["q"] = a.q.get_str();
  j["q_bits"] = static_cast<long>(mpz_sizeinbase(a.q.get_mpz_t(), 2));
  return j;
}

inline ordered_json audit_json(const AuditRecord& r) {
  ordered_json j;
  j["i"] = r.i;
  j["m"] = r.m;
  j["q_bits"] = r.q_bits;
  j["measured_exponent"] = r.measured_exponent;
  j["predicted_exponent"] = r.predicted_exponent;
  j["ratio"] = r.ratio;
  j["within_tol"] = r.within_tol;
  j["degenerate"] = r.degenerate;
  return j;
}

inline ordered_json evaluated_json(const EvaluatedNumber& e) {
  ordered_json j;
  j["b"] = e.b.get_str();
  j["M"] = e.M;
  j["approximation"] = elem_str(e.approximation);
  j["error_bound"] = elem_str(e.error_bound);
  j["error_bound_log2"] = log2_abs(e.error_bound);
  return j;
}

inline ordered_json estimate_json(const ExponentEstimate& e) {
  ordered_json j;
  j["certified"] = static_cast<long>(e.a.size());
  j["mu_hat_window"] = e.mu_hat;
  j["mu_hat_full"] = e.mu_hat_full;
  j["window"] = e.window;
  ordered_json a = ordered_json::array();
  for (const auto& x : e.a) a.push_back(x.get_str());
  j["partial_quotients"] = std::move(a);
  j["q_last_bits"] =
      e.q.empty() ? 0 : static_cast<long>(mpz_sizeinbase(e.q.back().get_mpz_t(), 2));
  return j;
}

inline ordered_json periodicity_json(const std::optional<PeriodicityEvidence>& ev,
                                     long n) {
  ordered_json j;
  if (ev) {
    j["modulus"] = static_cast<long>(ev->modulus);
    j["preperiod"] = ev->preperiod;
    j["period"] = ev->period;
    j["verified_length"] = ev->verified_length;
  } else {
    j["period"] = nullptr;
    j["verified_length"] = n;
  }
  j["note"] = "empirical periodicity over a finite prefix, not a proof";
  return j;
}

// ---------------------------------------------------------------------------
// Parsing

inline mpz_class json_to_mpz(const nlohmann::json& v) {
  if (v.is_number_integer()) return mpz_class(v.get<long>());
  if (v.is_string()) return mpz_class(v.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

inline Polynomial<IntegerRing> json_to_poly(const nlohmann::json& v) {
  if (!v.is_array()) throw std::invalid_argument("polynomial must be a coefficient list");
  IntegerRing Z;
  std::vector<mpz_class> c;
  for (const auto& x : v) c.push_back(json_to_mpz(x));
  return Polynomial<IntegerRing>(Z, std::move(c));
}

inline MahlerEquation json_to_equation(const nlohmann::json& j) {
  for (const char* key : {"B", "C", "D", "d"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("equation literal missing '") + key + "'");
  Polynomial<IntegerRing> A =
      j.contains("A") ? json_to_poly(j["A"]) : Polynomial<IntegerRing>(IntegerRing{});
  return MahlerEquation(A, json_to_poly(j["B"]), json_to_poly(j["C"]),
                        json_to_poly(j["D"]), j["d"].get<long>());
}

// A sequence spec is either a registry name or a JSON object
//   {"kind":"named","name":...}
//   {"kind":"functional_equation","A":[...],"B":[...],"C":[...],"D":[...],"d":n,"c0":...}
//   {"kind":"product2","u":...,"C":[...],"D":[...]}
//   {"kind":"product3","C":[...],"D":[...]}
//   {"kind":"double_sum","alpha":a,"beta":b,"sign":+-1}
inline SequenceSpec parse_sequence_spec(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty sequence spec");
  if (text[0] != '{') return SequenceSpec::named_spec(text);
  nlohmann::json j = nlohmann::json::parse(text);
  std::string kind = j.at("kind").get<std::string>();
  SequenceSpec s;
  if (kind == "named") {
    s.kind = SequenceSpec::Kind::named;
    s.name = j.at("name").get<std::string>();
  } else if (kind == "functional_equation") {
    s.kind = SequenceSpec::Kind::functional_equation;
    s.eq = json_to_equation(j);
    if (j.contains("c0")) s.c0 = json_to_mpz(j["c0"]);
  } else if (kind == "product2") {
    s.kind = SequenceSpec::Kind::product2;
    s.u = json_to_mpz(j.at("u"));
    s.C = json_to_poly(j.at("C"));
    s.D = json_to_poly(j.at("D"));
  } else if (kind == "product3") {
    s.kind = SequenceSpec::Kind::product3;
    s.C = json_to_poly(j.at("C"));
    s.D = json_to_poly(j.at("D"));
  } else if (kind == "double_sum") {
    s.kind = SequenceSpec::Kind::double_sum;
    s.alpha = j.at("alpha").get<long>();
    s.beta = j.at("beta").get<long>();
    s.sign = j.at("sign").get<int>();
  } else {
    throw std::invalid_argument("unknown sequence kind '" + kind + "'");
  }
  return s;
}

}  // namespace hankelmu
