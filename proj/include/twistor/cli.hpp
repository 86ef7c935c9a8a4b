#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistor/deformation.hpp"
#include "twistor/families.hpp"
#include "twistor/locus.hpp"
#include "twistor/modp.hpp"

namespace twistor::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kComputation = 3 };

// argv excludes the program name.  Documents go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "A..B" with optional signs; nullopt on malformed input or A > B.
std::optional<std::pair<int, int>> parse_range(const std::string& s);

// JSON builders shared by the CLI and the tests.
Json zpoly_json(const rings::ZPoly& p);  // decimal strings, lowest degree first
Json bivar_json(const rings::BivarPoly& p);  // rows by x-degree, entries by y-degree
Json number10(long double v);  // double rounded to 10 significant digits
Json padic_json(const rings::Padic& a);
Json ppoly_json(const defo::PPoly& p);  // coefficient strings, lowest first
Json root_json(const locus::RootDatum& r);
Json tangent_json(const locus::TangentReport& t);
Json dehn_json(const locus::DehnReport& d);
Json modp_root_json(const modp::ModpRoot& r);
Json modp_rep_json(const modp::ModpRepData& d);
Json survey_row_json(const modp::SurveyRow& row);
Json identity_json(const families::IdentityReport& rep);
Json lfunction_json(const defo::LFunctionResult& L);
Json parabolic_json(const defo::ParabolicResult& P);

}  // namespace twistor::cli
