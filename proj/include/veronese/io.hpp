#ifndef VERONESE_IO_HPP
#define VERONESE_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "veronese/complex.hpp"
#include "veronese/lift.hpp"
#include "veronese/resolution.hpp"
#include "veronese/syzygy.hpp"
#include "veronese/verify.hpp"

namespace veronese {

/// Malformed complex JSON (bad structure, unknown field, unparsable entry).
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kComplexFormatVersion = 1;

/// {"format": 1, "field": "q" | "fp:<p>", "curve": {"f": text, "d": int} | null,
///  "modules": [[twist, ...], ...],
///  "differentials": [{"rows": r, "cols": c, "entries": [[text, ...], ...]}, ...]}
nlohmann::json complex_to_json(const ResolutionComplex& c);
/// Rebuilds the complex, recomputing the lift data from "curve". Throws
/// FormatError on anything that does not describe a chained complex.
/// Entry degrees are not checked here; see degree_check.
ResolutionComplex complex_from_json(const nlohmann::json& j);
ResolutionComplex complex_from_text(const std::string& text);

/// Entry degrees agree with the twists of every differential.
CheckResult degree_check(const ResolutionComplex& c);

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const BettiTable& b);
nlohmann::json to_json(const ExactnessReport& r);
nlohmann::json to_json(const SpanComparison& s);
nlohmann::json lift_to_json(const Polynomial& f);
nlohmann::json to_json(const std::vector<LabeledVector>& family);
nlohmann::json to_json(const std::vector<PolyVector>& basis);

/// Multi-line listing of modules and differentials.
std::string complex_to_text(const ResolutionComplex& c);
std::string lift_to_text(const Polynomial& f);
std::string report_to_text(const ExactnessReport& r);

}  // namespace veronese

#endif
