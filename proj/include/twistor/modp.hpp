#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistor/rings/mat2.hpp"
#include "twistor/rings/prime_field.hpp"
#include "twistor/rings/unipoly.hpp"

namespace twistor::modp {

using rings::Fp;
using rings::Fp2;
using rings::u64;
using rings::UniPoly;

struct ModpRoot {
  int n = 0;
  u64 p = 0;
  u64 alpha = 0;
  long long signed_alpha = 0;
  int multiplicity = 0;
  bool is_abelian_locus = false;  // alpha^2 - alpha - 2 = 0, i.e. alpha in {-1, 2}
  bool dfdx_nonzero = false;
  bool dfdy_nonzero = false;
  bool is_regular = false;
  bool is_nonacyclic = false;
  u64 dfdx = 0, dfdy = 0;  // partials of f_n at (alpha, alpha)
  // Cross-check of the partials against the rational closed forms (or the
  // p | 3n-1 special values) when those are defined mod p.
  bool closed_form_checked = false;
  bool closed_form_agrees = true;
};

UniPoly<Fp> kn_mod(int n, u64 p);
int multiplicity_at(const UniPoly<Fp>& f, const Fp& a);

std::vector<ModpRoot> kn_roots_modp(int n, u64 p);
ModpRoot classify_point(int n, u64 p, long long alpha);

enum class Variant { Riley, RepU };
const char* variant_name(Variant v);

struct ModpRepData {
  int n = 0;
  u64 p = 0;
  u64 x = 0, y = 0;
  Variant variant = Variant::Riley;
  bool in_base_field = true;  // all entries lie in F_p
  std::string field_used;     // "F_p" or "F_p^2"
  rings::Fp2Ctx ctx;
  rings::Mat2<Fp2> A, B;
  bool det_ok = false;
  bool relation_ok = false;
  // repU with x = y: whether x - 2 is a square in F_p, and whether that
  // agrees with in_base_field.
  std::optional<bool> sqrt_x_minus_2_in_fp;
  std::optional<bool> containment_matches;
};

ModpRepData rep_matrices_modp(int n, u64 p, long long x, long long y, Variant v);

struct SurveyRow {
  int n = 0;
  u64 p = 0;
  std::vector<ModpRoot> roots;
};

std::vector<u64> odd_primes_up_to(u64 p_max);
// Rows ordered by (n as given, p); roots ordered by alpha.
std::vector<SurveyRow> survey(const std::vector<int>& n_list, u64 p_max, int threads = 1);
// Whether a row is selected by "some root with |x| <= 5" (signed residues).
bool has_small_root(const SurveyRow& row, long long bound = 5);

}  // namespace twistor::modp
