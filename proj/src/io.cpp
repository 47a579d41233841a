#include "veronese/io.hpp"

#include <sstream>

#include "veronese/errors.hpp"
#include "veronese/parse.hpp"

namespace veronese {

using nlohmann::json;

namespace {

std::string where(std::size_t i, std::size_t r, std::size_t c) {
  return "d_" + std::to_string(i) + " entry (" + std::to_string(r) + ", " + std::to_string(c) + ")";
}

template <class T>
T get(const json& j, const char* key, const std::string& context) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(context + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(context + ": \"" + key + "\" has the wrong type");
  }
}

std::vector<std::size_t> veronese_ranks_for(const std::optional<CurveProvenance>& curve, std::size_t modules) {
  if (modules != (curve ? 5u : 4u)) return {};
  if (curve) return {1, 6, 8, 3, 0};
  return {1, 6, 8, 3};
}

std::string verdict_text(const ExactnessCell& x) {
  switch (x.verdict) {
    case Verdict::Exact: return "EXACT";
    case Verdict::Homology: return "HOMOLOGY(" + std::to_string(x.homology) + ")";
    case Verdict::NotComplex: return "NOT_COMPLEX(" + std::to_string(x.composition_rank) + ")";
  }
  return "";
}

json poly_list(const std::vector<Polynomial>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(render(p));
  return out;
}

}  // namespace

json complex_to_json(const ResolutionComplex& c) {
  json out;
  out["format"] = kComplexFormatVersion;
  out["field"] = c.field.descriptor();
  if (c.curve)
    out["curve"] = {{"f", render(c.curve->f)}, {"d", c.curve->degree}};
  else
    out["curve"] = nullptr;
  out["modules"] = json::array();
  for (const auto& m : c.modules) out["modules"].push_back(m.twists);
  out["differentials"] = json::array();
  for (const auto& d : c.differentials) {
    json entries = json::array();
    for (std::size_t r = 0; r < d.entries.rows(); ++r) {
      json row = json::array();
      for (std::size_t col = 0; col < d.entries.cols(); ++col) row.push_back(render(d.entries(r, col)));
      entries.push_back(std::move(row));
    }
    out["differentials"].push_back({{"rows", d.entries.rows()}, {"cols", d.entries.cols()}, {"entries", entries}});
  }
  return out;
}

ResolutionComplex complex_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("complex: expected a JSON object");
  if (get<int>(j, "format", "complex") != kComplexFormatVersion)
    throw FormatError("complex: unsupported format version");

  ResolutionComplex c;
  try {
    c.field = Field::parse(get<std::string>(j, "field", "complex"));
  } catch (const FieldError& e) {
    throw FormatError(std::string("complex: ") + e.what());
  }

  for (const auto& twists : get<std::vector<std::vector<int>>>(j, "modules", "complex")) c.modules.push_back({twists});

  const json& diffs = j.contains("differentials") ? j.at("differentials") : json();
  if (!diffs.is_array()) throw FormatError("complex: \"differentials\" must be an array");
  for (std::size_t i = 1; i <= diffs.size(); ++i) {
    const json& d = diffs[i - 1];
    const std::string context = "d_" + std::to_string(i);
    const auto rows = get<std::size_t>(d, "rows", context);
    const auto cols = get<std::size_t>(d, "cols", context);
    const auto entries = get<std::vector<std::vector<std::string>>>(d, "entries", context);
    if (entries.size() != rows) throw FormatError(context + ": row count differs from \"rows\"");
    if (i >= c.modules.size()) throw FormatError(context + ": no module E_" + std::to_string(i));
    Matrix<Polynomial> m(rows, cols, Polynomial(Ring::Ambient, c.field));
    for (std::size_t r = 0; r < rows; ++r) {
      if (entries[r].size() != cols) throw FormatError(context + ": row " + std::to_string(r) + " has the wrong length");
      for (std::size_t col = 0; col < cols; ++col) {
        try {
          m(r, col) = parse_poly(entries[r][col], Ring::Ambient, c.field);
        } catch (const std::exception& e) {
          throw FormatError(where(i, r, col) + ": " + e.what());
        }
      }
    }
    c.differentials.push_back({c.modules[i], c.modules[i - 1], std::move(m)});
  }

  if (j.contains("curve") && !j.at("curve").is_null()) {
    const json& curve = j.at("curve");
    Polynomial f(Ring::Curve, c.field);
    try {
      f = parse_poly(get<std::string>(curve, "f", "curve"), Ring::Curve, c.field);
    } catch (const ParseError& e) {
      throw FormatError(std::string("curve: ") + e.what());
    }
    const int d = get<int>(curve, "d", "curve");
    if (curve_degree(f) != d) throw FormatError("curve: \"d\" does not match the degree of f");
    if (d < 2) throw PreconditionError("curve degree must be at least 2, got " + std::to_string(d));
    if (d % 2 == 0)
      c.curve = CurveProvenance{f, d, Parity::Even, lift_even(f), false};
    else
      c.curve = CurveProvenance{f, d, Parity::Odd, lift_odd(f), false};
  }
  c.veronese_ranks = veronese_ranks_for(c.curve, c.modules.size());

  try {
    c.validate_shapes();
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("complex: ") + e.what());
  }
  return c;
}

ResolutionComplex complex_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return complex_from_json(j);
}

CheckResult degree_check(const ResolutionComplex& c) {
  for (std::size_t i = 1; i <= c.length(); ++i) {
    try {
      c.d(i).validate();
    } catch (const std::invalid_argument& e) {
      return {false, std::nullopt, "d_" + std::to_string(i) + ": " + e.what()};
    }
  }
  return {true, std::nullopt, "every entry has the degree forced by the twists"};
}

json to_json(const CheckResult& r) {
  json out{{"pass", r.pass}, {"message", r.message}};
  if (r.witness)
    out["witness"] = {{"index", r.witness->index},
                      {"row", r.witness->row},
                      {"col", r.witness->col},
                      {"value", render(r.witness->value)}};
  return out;
}

json to_json(const BettiTable& b) {
  json out = json::array();
  for (const auto& [key, count] : b.entries()) out.push_back({{"i", key.first}, {"j", key.second}, {"count", count}});
  return out;
}

json to_json(const ExactnessReport& r) {
  json cells = json::array();
  for (const auto& x : r.cells)
    cells.push_back({{"position", x.position},
                     {"degree", x.degree},
                     {"dim", x.dim},
                     {"rank", x.rank},
                     {"kernel", x.kernel},
                     {"rank_next", x.rank_next},
                     {"composition_rank", x.composition_rank},
                     {"verdict", verdict_text(x)}});
  json ideal = json::array();
  for (const auto& x : r.ideal)
    ideal.push_back({{"degree", x.degree}, {"image_dim", x.image_dim}, {"expected", x.expected}, {"pass", x.pass}});
  return {{"verdict", r.exact() ? "EXACT" : "HOMOLOGY"},
          {"field", "fp:" + std::to_string(r.prime)},
          {"degree_bound", r.n_max},
          {"cells", cells},
          {"ideal", ideal}};
}

json to_json(const SpanComparison& s) {
  return {{"degree", s.degree},
          {"oracle_dim", s.oracle_dim},
          {"image_dim", s.image_dim},
          {"stacked_rank", s.stacked_rank},
          {"pass", s.pass()}};
}

json lift_to_json(const Polynomial& f) {
  const int d = curve_degree(f);
  const Parity parity = parity_of(d);
  const ParityParts parts = parity_split(f, parity);
  json out{{"f", render(f)}, {"d", d}, {"parity", parity == Parity::Even ? "even" : "odd"}};
  out["parts"] = {{"I", render(parts[0])}, {"II", render(parts[1])}, {"III", render(parts[2])}, {"IV", render(parts[3])}};
  if (parity == Parity::Even) {
    out["F"] = render(lift_even(f).F);
  } else {
    const OddLift lift = lift_odd(f);
    out["h"] = {{"I", render(lift.h[0])}, {"II", render(lift.h[1])}, {"III", render(lift.h[2])}, {"IV", render(lift.h[3])}};
    out["F"] = {render(lift.F[0]), render(lift.F[1]), render(lift.F[2])};
  }
  return out;
}

json to_json(const std::vector<LabeledVector>& family) {
  json out = json::array();
  for (const auto& v : family) out.push_back({{"label", v.label}, {"entries", poly_list(v.entries)}});
  return out;
}

json to_json(const std::vector<PolyVector>& basis) {
  json out = json::array();
  for (const auto& v : basis) out.push_back(poly_list(v));
  return out;
}

std::string complex_to_text(const ResolutionComplex& c) {
  std::ostringstream out;
  out << "field " << c.field.descriptor() << "\n";
  if (c.curve) out << "curve " << render(c.curve->f) << " (degree " << c.curve->degree << ")\n";
  for (std::size_t i = 0; i < c.modules.size(); ++i) {
    out << "E_" << i << " =";
    std::map<int, int> counts;
    for (int a : c.modules[i].twists) ++counts[a];
    bool first = true;
    for (auto [a, k] : counts) {
      out << (first ? " " : " + ") << "S(" << -a << ")";
      if (k > 1) out << "^" << k;
      first = false;
    }
    out << "\n";
  }
  for (std::size_t i = 1; i <= c.length(); ++i) {
    const auto& e = c.d(i).entries;
    out << "\nd_" << i << " (" << e.rows() << " x " << e.cols() << ")\n";
    for (std::size_t col = 0; col < e.cols(); ++col) {
      out << "  col " << col << ":";
      for (std::size_t r = 0; r < e.rows(); ++r) out << (r ? ", " : " [") << render(e(r, col));
      out << "]\n";
    }
  }
  return out.str();
}

std::string lift_to_text(const Polynomial& f) {
  const json j = lift_to_json(f);
  std::ostringstream out;
  out << "f = " << j["f"].get<std::string>() << "  (degree " << j["d"] << ", " << j["parity"].get<std::string>()
      << ")\n";
  for (const char* k : {"I", "II", "III", "IV"}) out << "f_" << k << " = " << j["parts"][k].get<std::string>() << "\n";
  if (j["F"].is_string()) {
    out << "F = " << j["F"].get<std::string>() << "\n";
  } else {
    for (const char* k : {"I", "II", "III", "IV"}) out << "h_" << k << " = " << j["h"][k].get<std::string>() << "\n";
    for (int n = 0; n < 3; ++n) out << "F_" << n << " = " << j["F"][n].get<std::string>() << "\n";
  }
  return out.str();
}

std::string report_to_text(const ExactnessReport& r) {
  std::ostringstream out;
  out << "exactness over F_" << r.prime << " for degrees 0.." << r.n_max << ": " << (r.exact() ? "EXACT" : "HOMOLOGY")
      << "\n";
  out << "  pos  deg     dim    rank  kernel  rank_next  verdict\n";
  for (const auto& x : r.cells) {
    char line[128];
    std::snprintf(line, sizeof line, "  %3zu  %3d  %6llu  %6llu  %6llu  %9llu  %s\n", x.position, x.degree,
                  static_cast<unsigned long long>(x.dim), static_cast<unsigned long long>(x.rank),
                  static_cast<unsigned long long>(x.kernel), static_cast<unsigned long long>(x.rank_next),
                  verdict_text(x).c_str());
    out << line;
  }
  out << "  ideal:";
  for (const auto& x : r.ideal) out << " " << x.degree << ":" << x.image_dim << (x.pass ? "" : "!=" + std::to_string(x.expected));
  out << "\n";
  return out.str();
}

}  // namespace veronese
