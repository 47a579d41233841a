// Command-line front end: resolve, verify, betti, oracle, lift, random-curve.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or format error,
// 3 precondition violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "veronese/errors.hpp"
#include "veronese/io.hpp"
#include "veronese/parse.hpp"
#include "veronese/random_curve.hpp"
#include "veronese/resolution.hpp"
#include "veronese/veronese_map.hpp"
#include "veronese/verify.hpp"

using namespace veronese;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kFormatError = 2, kPrecondition = 3 };

struct Options {
  std::string input;
  std::string out;
  std::string field = "q";
  std::string format = "json";
  std::string ring = "auto";
  bool assume_irreducible = false;
  bool veronese = false;
  int degree_bound = -1;
  int degree = 0;
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw FormatError("cannot write " + o.out);
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

Polynomial read_curve(const Options& o) {
  return parse_poly(strip_comments(read_file(o.input)), Ring::Curve, Field::parse(o.field));
}

bool looks_like_json(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

int cmd_resolve(const Options& o) {
  ResolutionComplex c;
  if (o.veronese) {
    c = veronese_complex(Field::parse(o.field));
  } else {
    c = build_resolution(read_curve(o), o.assume_irreducible);
    if (!o.assume_irreducible)
      std::cerr << "warning: irreducibility of f is assumed, not checked (pass --assume-irreducible to attest)\n";
  }
  emit(o, o.format == "json" ? complex_to_json(c).dump(2) : complex_to_text(c));
  return kOk;
}

int cmd_verify(const Options& o) {
  ResolutionComplex c = complex_from_text(read_file(o.input));
  std::uint32_t prime = Field::kDefaultPrime;
  if (c.field.is_prime_field()) prime = c.field.characteristic();
  if (o.field != "q") {
    Field f = Field::parse(o.field);
    if (!f.is_prime_field()) throw PreconditionError("verification needs a prime field fp:P");
    prime = f.characteristic();
  }
  const int bound = o.degree_bound >= 0 ? o.degree_bound : default_degree_bound(c);

  CheckResult degrees = degree_check(c);
  CheckResult complex = degrees.pass ? check_complex(c) : CheckResult{false, std::nullopt, "skipped"};
  CheckResult minimal = check_minimal(c);
  CheckResult theta = theta_vanishing_check(c);
  std::optional<ExactnessReport> exactness;
  if (degrees.pass) exactness = graded_exactness(c, bound, prime);

  const bool pass = degrees.pass && complex.pass && minimal.pass && theta.pass && exactness && exactness->exact();
  if (o.format == "json") {
    json out{{"pass", pass},
             {"degrees", to_json(degrees)},
             {"complex", to_json(complex)},
             {"minimal", to_json(minimal)},
             {"theta", to_json(theta)},
             {"betti", to_json(betti_table(c))}};
    out["exactness"] = exactness ? to_json(*exactness) : json(nullptr);
    emit(o, out.dump(2));
  } else {
    std::ostringstream text;
    auto line = [&](const char* name, const CheckResult& r) {
      text << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.message << "\n";
    };
    line("degrees", degrees);
    line("complex", complex);
    line("minimal", minimal);
    line("theta", theta);
    text << betti_table(c).diagram();
    if (exactness) text << report_to_text(*exactness);
    text << (pass ? "verification passed\n" : "verification FAILED\n");
    emit(o, text.str());
  }
  return pass ? kOk : kVerificationFailed;
}

int cmd_betti(const Options& o) {
  const std::string text = read_file(o.input);
  ResolutionComplex c = looks_like_json(text)
                            ? complex_from_text(text)
                            : build_resolution(parse_poly(strip_comments(text), Ring::Curve, Field::parse(o.field)));
  const BettiTable b = betti_table(c);
  emit(o, o.format == "json" ? to_json(b).dump(2) : b.diagram());
  return kOk;
}

int cmd_oracle(const Options& o) {
  const Field field = Field::parse(o.field);
  std::vector<std::string> lines;
  std::istringstream in(strip_comments(read_file(o.input)));
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  if (lines.empty()) throw FormatError("no generators given");

  auto parse_all = [&](Ring ring) {
    std::vector<Polynomial> gens;
    for (const auto& l : lines) gens.push_back(parse_poly(l, ring, field));
    return gens;
  };
  std::vector<Polynomial> gens;
  if (o.ring == "curve") {
    gens = parse_all(Ring::Curve);
  } else if (o.ring == "ambient") {
    gens = parse_all(Ring::Ambient);
  } else {
    try {
      gens = parse_all(Ring::Ambient);
    } catch (const ParseError&) {
      gens = parse_all(Ring::Curve);
    }
  }
  for (const auto& g : gens)
    if (!g.homogeneous_degree() || g.is_zero()) throw PreconditionError("generators must be nonzero and homogeneous");

  auto basis = syzygy_oracle(gens, o.degree);
  if (o.format == "json") {
    emit(o, json{{"ring", ring_name(gens.front().ring())},
                 {"degree", o.degree},
                 {"dimension", basis.size()},
                 {"basis", to_json(basis)}}
                .dump(2));
  } else {
    std::ostringstream text;
    text << "degree " << o.degree << " syzygies: dimension " << basis.size() << "\n";
    for (const auto& v : basis) {
      text << " ";
      for (std::size_t k = 0; k < v.size(); ++k) text << (k ? ", " : " (") << render(v[k]);
      text << ")\n";
    }
    emit(o, text.str());
  }
  return kOk;
}

int cmd_lift(const Options& o) {
  Polynomial f = read_curve(o);
  emit(o, o.format == "json" ? lift_to_json(f).dump(2) : lift_to_text(f));
  return kOk;
}

int cmd_random_curve(const Options& o) {
  Polynomial f = random_curve(o.degree, o.seed, Field::parse(o.field));
  if (o.format == "json")
    emit(o, json{{"f", render(f)}, {"d", o.degree}, {"seed", o.seed}}.dump(2));
  else
    emit(o, "# random curve, degree " + std::to_string(o.degree) + ", seed " + std::to_string(o.seed) + "\n" +
                render(f) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal free resolutions of Veronese images of plane curves"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  };

  auto* resolve = app.add_subcommand("resolve", "Build the resolution of a curve");
  resolve->add_option("--input", o.input, "Curve file (one polynomial in x0, x1, x2)");
  resolve->add_option("--field", o.field, "Coefficient field: q or fp:P");
  resolve->add_flag("--assume-irreducible", o.assume_irreducible, "Attest that f is irreducible");
  resolve->add_flag("--veronese", o.veronese, "Emit the resolution of the Veronese surface itself");
  add_format(resolve);

  auto* verify = app.add_subcommand("verify", "Verify a complex given as JSON");
  verify->add_option("--input", o.input, "Complex JSON file")->required();
  verify->add_option("--degree-bound", o.degree_bound, "Largest internal degree checked (default m + 6)");
  verify->add_option("--field", o.field, "Prime field fp:P for the rank checks");
  add_format(verify);

  auto* betti = app.add_subcommand("betti", "Betti table of a curve file or complex JSON");
  betti->add_option("--input", o.input, "Curve file or complex JSON")->required();
  betti->add_option("--field", o.field, "Coefficient field for curve input");
  add_format(betti);

  auto* oracle = app.add_subcommand("oracle", "Brute-force syzygies of generators in one degree");
  oracle->add_option("--gens", o.input, "File with one generator per line")->required();
  oracle->add_option("--degree", o.degree, "Internal degree")->required();
  oracle->add_option("--field", o.field, "Coefficient field: q or fp:P");
  oracle->add_option("--ring", o.ring, "Ring of the generators")->check(CLI::IsMember({"auto", "curve", "ambient"}));
  add_format(oracle);

  auto* lift = app.add_subcommand("lift", "Parity split and lifts of a curve");
  lift->add_option("--input", o.input, "Curve file")->required();
  lift->add_option("--field", o.field, "Coefficient field: q or fp:P");
  add_format(lift);

  auto* random = app.add_subcommand("random-curve", "Seeded dense random curve");
  random->add_option("--degree", o.degree, "Curve degree")->required();
  random->add_option("--seed", o.seed, "Random seed")->required();
  random->add_option("--field", o.field, "Coefficient field: q or fp:P");
  add_format(random);

  // per-subcommand format defaults are set when the subcommand is parsed
  for (auto [sub, fallback] : std::initializer_list<std::pair<CLI::App*, const char*>>{
           {resolve, "json"}, {verify, "json"}, {betti, "text"}, {oracle, "json"}, {lift, "text"}, {random, "text"}})
    sub->preparse_callback([&o, fallback = std::string(fallback)](std::size_t) { o.format = fallback; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFormatError;
  }

  try {
    if (*resolve) {
      if (!o.veronese && o.input.empty()) throw FormatError("resolve needs --input or --veronese");
      return cmd_resolve(o);
    }
    if (*verify) return cmd_verify(o);
    if (*betti) return cmd_betti(o);
    if (*oracle) return cmd_oracle(o);
    if (*lift) return cmd_lift(o);
    return cmd_random_curve(o);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const RingMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kFormatError;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kFormatError;
  } catch (const FieldError& e) {
    std::cerr << "field error: " << e.what() << "\n";
    return kFormatError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFormatError;
  }
}
