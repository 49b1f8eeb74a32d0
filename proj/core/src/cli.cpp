#include "catstat/cli.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catstat/coherence.hpp"
#include "catstat/error.hpp"
#include "catstat/model_io.hpp"
#include "catstat/transmute.hpp"

namespace catstat::cli {
namespace {

using nlohmann::json;

constexpr std::int64_t kExhaustiveGroupLimit = 64;

struct Report {
  std::string command;
  std::string input;
  CheckReport checks;
  json results = json::object();
};

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json vector_json(const FockVector& v) {
  json terms = json::array();
  for (const auto& [w, a] : v.terms()) {
    json word = json::array();
    for (auto letter : w) word.push_back(letter + 1);
    terms.push_back({{"word", std::move(word)}, {"amplitude", complex_json(a)}});
  }
  return terms;
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks.checks) {
    json entry = {{"name", c.name}, {"status", to_string(c.status)}, {"defect", c.defect}};
    entry["witness"] = c.witness.empty() ? json(nullptr) : json(c.witness);
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return {{"command", r.command}, {"input", r.input}, {"checks", std::move(checks)}, {"results", r.results}};
}

void print_text(const Report& r, std::ostream& out) {
  out << "catstat " << r.command;
  if (!r.input.empty()) out << " " << r.input;
  out << "\n";
  for (const auto& c : r.checks.checks) {
    out << "  " << std::left << std::setw(8)
        << (c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP")
        << std::setw(28) << c.name << " defect=" << c.defect;
    if (!c.witness.empty()) out << "  witness: " << c.witness;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  if (!r.results.empty()) {
    for (const auto& [key, value] : r.results.items()) {
      if (value.is_string()) out << "  " << key << ": " << value.get<std::string>() << "\n";
      else out << "  " << key << ": " << value.dump() << "\n";
    }
  }
  out << (r.checks.passed() ? "OK" : "FAILED") << "\n";
}

// Bilinearity and well-definedness on every triple; the count of failing
// identities is the defect.
CheckResult bilinearity_check(const Bicharacter& eps) {
  CheckResult r;
  r.name = "bicharacter_bilinear";
  if (eps.group().size() > kExhaustiveGroupLimit) {
    r.status = CheckStatus::Skipped;
    r.detail = "group larger than " + std::to_string(kExhaustiveGroupLimit);
    return r;
  }
  const auto elements = all_elements(eps.group());
  std::size_t failures = 0;
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      for (const auto& c : elements) {
        const bool right = eps(a, b + c) == eps(a, b) + eps(a, c);
        const bool left = eps(a + b, c) == eps(a, c) + eps(b, c);
        if (!right || !left) {
          if (failures == 0) r.witness = "(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + ")";
          ++failures;
        }
      }
    }
  }
  r.defect = static_cast<double>(failures);
  r.status = failures == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckResult witness_check(std::string name, const std::optional<PairWitness>& w) {
  CheckResult r;
  r.name = std::move(name);
  if (w) {
    r.status = CheckStatus::Fail;
    r.defect = std::abs(w->lhs.to_complex() - (-w->rhs).to_complex());
    r.witness = "(" + w->first.to_string() + "," + w->second.to_string() + "): " + w->lhs.to_string() + " and " +
                w->rhs.to_string();
  }
  return r;
}

Report cmd_check(const std::string& path, std::optional<double> tol_flag, std::optional<std::size_t> nmax_flag) {
  const auto file = load_model(path);
  const auto& m = file.model;
  const double tol = tol_flag.value_or(file.options.tolerance);
  const std::size_t n_max = nmax_flag.value_or(file.options.n_max);
  for (std::size_t n = 0; n <= n_max + 2; ++n) sector_size(m.generator_count(), n);

  Report r{"check", path, {}, json::object()};
  CheckResult valid;
  valid.name = "bicharacter_valid";
  r.checks.add(valid);
  r.checks.add(bilinearity_check(m.bicharacter()));
  r.checks.add(witness_check("is_normalized", normalization_violation(m.bicharacter())));
  r.checks.append(check_yang_baxter(m, tol));
  r.checks.append(check_symmetry(m, tol));
  r.checks.append(check_infinite_statistics(m, n_max, tol));
  r.checks.append(check_commutators(m, n_max, tol));
  r.checks.append(check_braid_exchange_relations(m, n_max, tol));

  const auto grams = gram_matrices(m, n_max);
  double asym = 0.0;
  std::string asym_w;
  bool all_hermitian = true;
  double min_ev = std::numeric_limits<double>::infinity();
  json dims = json::array();
  for (const auto& g : grams) {
    json row = {{"n", g.sector}, {"full", g.basis.size()}};
    if (g.max_asymmetry > asym) {
      asym = g.max_asymmetry;
      asym_w = "sector " + std::to_string(g.sector);
    }
    if (g.is_hermitian(tol)) {
      row["quotient"] = sector_dimension(g, tol).quotient;
      const auto psd = gram_psd_check(g, tol);
      row["min_eigenvalue"] = *psd.min_eigenvalue;
      min_ev = std::min(min_ev, *psd.min_eigenvalue);
    } else {
      all_hermitian = false;
      row["quotient"] = nullptr;
      row["min_eigenvalue"] = nullptr;
    }
    dims.push_back(std::move(row));
  }
  r.checks.add(graded_check("gram_hermitian", asym, tol, asym_w));
  CheckResult psd;
  psd.name = "gram_psd";
  if (!all_hermitian) {
    psd.status = CheckStatus::Skipped;
    psd.detail = "non-Hermitian Gram";
  } else {
    psd = graded_check("gram_psd", std::max(0.0, -min_ev), tol);
  }
  r.checks.add(psd);

  r.results["generators"] = m.generator_count();
  r.results["n_max"] = n_max;
  r.results["tolerance"] = tol;
  r.results["dimensions"] = std::move(dims);
  return r;
}

Report cmd_gram(const std::string& path, std::size_t sector, std::optional<double> tol_flag) {
  const auto file = load_model(path);
  const double tol = tol_flag.value_or(file.options.tolerance);
  const auto g = gram_matrix(file.model, sector);
  Report r{"gram", path, {}, json::object()};
  r.checks.add(graded_check("gram_hermitian", g.max_asymmetry, tol));
  const auto psd = gram_psd_check(g, tol);
  r.checks.append(psd.report);
  r.results["sector"] = sector;
  r.results["size"] = g.basis.size();
  if (g.is_hermitian(tol)) {
    r.results["rank"] = sector_dimension(g, tol).quotient;
    r.results["min_eigenvalue"] = *psd.min_eigenvalue;
  } else {
    r.results["rank"] = nullptr;
    r.results["min_eigenvalue"] = nullptr;
  }
  json basis = json::array();
  for (const auto& w : g.basis) basis.push_back(word_to_string(w, 1));
  r.results["basis"] = std::move(basis);
  json rows = json::array();
  for (Eigen::Index i = 0; i < g.matrix.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < g.matrix.cols(); ++j) row.push_back(complex_json(g.matrix(i, j)));
    rows.push_back(std::move(row));
  }
  r.results["matrix"] = std::move(rows);
  return r;
}

Report cmd_apply(const std::string& path, const std::string& program, const std::string& vector) {
  const auto file = load_model(path);
  const auto result = apply_program(file.model, parse_program(program), parse_vector(vector));
  Report r{"apply", path, {}, json::object()};
  r.results["program"] = program;
  r.results["input_vector"] = vector;
  r.results["vector"] = vector_json(result);
  r.results["text"] = result.to_string(1);
  return r;
}

Report cmd_transmute(const std::string& path, const std::string& hom_path, const std::string& bichar_path,
                     const std::string& out_path, std::optional<double> tol_flag,
                     std::optional<std::size_t> nmax_flag) {
  const auto file = load_model(path);
  const double tol = tol_flag.value_or(file.options.tolerance);
  const std::size_t n_max = nmax_flag.value_or(file.options.n_max);
  const auto h = parse_hom(read_text_file(hom_path), file.model.group());
  const auto target_eps = parse_bicharacter(read_text_file(bichar_path), h.target());
  const auto t = make_transmutation(file.model, h, target_eps);

  Report r{"transmute", path, {}, json::object()};
  auto eq = witness_check("bicharacter_transport", transmutation_violation(h, file.model.bicharacter(), target_eps));
  if (eq.failed()) {
    const auto w = transmutation_violation(h, file.model.bicharacter(), target_eps);
    eq.defect = std::abs(w->lhs.to_complex() - w->rhs.to_complex());
    eq.witness = "(" + w->first.to_string() + "," + w->second.to_string() + "): eps=" + w->lhs.to_string() +
                 " vs eps'=" + w->rhs.to_string();
  }
  r.checks.add(eq);
  r.checks.append(check_cross_symmetric(t, tol));
  r.checks.append(check_relation_transport(t, n_max, tol));

  const auto target_text = model_to_json(t.target(), {tol, n_max});
  r.results["target_model"] = json::parse(target_text);
  if (r.checks.passed() && !out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) raise(ErrorKind::Schema, "cannot write " + out_path);
    out << target_text << "\n";
    r.results["written"] = out_path;
  }
  return r;
}

Report cmd_normalize(const std::string& expr) {
  const auto e = parse_expr(expr);
  Report r{"normalize", {}, {}, json::object()};
  r.results["expression"] = expr;
  r.results["normal_form"] = normalize(e).to_string();
  return r;
}

std::size_t parse_index(std::string_view text, std::string_view step) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    raise(ErrorKind::Syntax, "bad step '" + std::string(step) + "': expected a positive index");
  }
  return value - 1;
}

double parse_double(std::string_view text, std::string_view whole) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) raise(ErrorKind::Syntax, "bad number in '" + std::string(whole) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ProcessProgram parse_program(std::string_view text) {
  ProcessProgram program;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(';', start), text.size());
    const auto step = trim(text.substr(start, end - start));
    start = end + 1;
    if (step.empty()) {
      if (end == text.size()) break;
      raise(ErrorKind::Syntax, "empty step in program '" + std::string(text) + "'");
    }
    const auto arg = step.substr(1);
    switch (step.front()) {
      case 'c': program.emplace_back(step::Create{parse_index(arg, step)}); break;
      case 'a': program.emplace_back(step::AnnihilateFree{parse_index(arg, step)}); break;
      case 'b': program.emplace_back(step::AnnihilateTwisted{parse_index(arg, step)}); break;
      case 'x': program.emplace_back(step::Exchange{parse_index(arg, step)}); break;
      case 's': program.emplace_back(step::Scale{parse_double(arg, step)}); break;
      default: raise(ErrorKind::Syntax, "unknown step '" + std::string(step) + "'");
    }
  }
  return program;
}

FockVector parse_vector(std::string_view text) {
  FockVector v;
  const auto whole = text;
  text = trim(text);
  if (text.empty()) raise(ErrorKind::Syntax, "empty vector");
  while (!text.empty()) {
    Complex coef = 1.0;
    const auto open = text.find('[');
    if (open == std::string_view::npos) raise(ErrorKind::Syntax, "expected '[' in vector '" + std::string(whole) + "'");
    auto head = trim(text.substr(0, open));
    if (!head.empty()) {
      if (head.back() != '*') raise(ErrorKind::Syntax, "expected 'coef*[...]' in '" + std::string(whole) + "'");
      head = trim(head.substr(0, head.size() - 1));
      if (head.size() >= 2 && head.front() == '(' && head.back() == ')') {
        const auto inner = head.substr(1, head.size() - 2);
        const auto comma = inner.find(',');
        if (comma == std::string_view::npos) raise(ErrorKind::Syntax, "expected (re,im) in '" + std::string(whole) + "'");
        coef = {parse_double(trim(inner.substr(0, comma)), whole), parse_double(trim(inner.substr(comma + 1)), whole)};
      } else {
        coef = parse_double(head, whole);
      }
    }
    const auto close = text.find(']', open);
    if (close == std::string_view::npos) raise(ErrorKind::Syntax, "unclosed '[' in '" + std::string(whole) + "'");
    Word w;
    auto body = trim(text.substr(open + 1, close - open - 1));
    while (!body.empty()) {
      const auto comma = std::min(body.find(','), body.size());
      w.push_back(parse_index(trim(body.substr(0, comma)), whole));
      body = comma == body.size() ? std::string_view{} : trim(body.substr(comma + 1));
    }
    v.add(w, coef);
    text = trim(text.substr(close + 1));
    if (!text.empty()) {
      if (text.front() != '+') raise(ErrorKind::Syntax, "expected '+' between terms in '" + std::string(whole) + "'");
      text = trim(text.substr(1));
      if (text.empty()) raise(ErrorKind::Syntax, "dangling '+' in '" + std::string(whole) + "'");
    }
  }
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized-statistics model checker"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the JSON report instead of text");
  app.fallthrough();

  std::string model_path, hom_path, bichar_path, out_path, program, vector = "[]", expr;
  std::optional<double> tol;
  std::optional<std::size_t> nmax;
  std::size_t sector = 0;

  auto* check = app.add_subcommand("check", "Run every consistency check on a model file");
  check->add_option("model", model_path, "Model JSON file")->required();
  check->add_option("--tol", tol, "Numeric tolerance");
  check->add_option("--nmax", nmax, "Largest sector checked");

  auto* gram = app.add_subcommand("gram", "Gram matrix, rank and smallest eigenvalue of one sector");
  gram->add_option("model", model_path, "Model JSON file")->required();
  gram->add_option("--sector", sector, "Sector (word length)")->required();
  gram->add_option("--tol", tol, "Numeric tolerance");

  auto* apply = app.add_subcommand("apply", "Apply a process program to a Fock vector");
  apply->add_option("model", model_path, "Model JSON file")->required();
  apply->add_option("--program", program, "Steps such as \"c1;c2;x1;b2\"")->required();
  apply->add_option("--vector", vector, "Input vector, default the vacuum \"[]\"");

  auto* transmute = app.add_subcommand("transmute", "Push a model along a group homomorphism");
  transmute->add_option("model", model_path, "Source model JSON file")->required();
  transmute->add_option("--hom", hom_path, "Homomorphism JSON file")->required();
  transmute->add_option("--target-bichar", bichar_path, "Target bicharacter JSON file")->required();
  transmute->add_option("--out", out_path, "Where to write the target model");
  transmute->add_option("--tol", tol, "Numeric tolerance");
  transmute->add_option("--nmax", nmax, "Largest sector checked");

  auto* norm = app.add_subcommand("normalize", "Coherence normal form of a tensor expression");
  norm->add_option("--expr", expr, "Expression, e.g. \"(A (x) B)^\"")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Report report;
  try {
    if (*check) report = cmd_check(model_path, tol, nmax);
    else if (*gram) report = cmd_gram(model_path, sector, tol);
    else if (*apply) report = cmd_apply(model_path, program, vector);
    else if (*transmute) report = cmd_transmute(model_path, hom_path, bichar_path, out_path, tol, nmax);
    else report = cmd_normalize(expr);
  } catch (const Error& e) {
    err << "catstat: " << e.what() << "\n";
    return kExitInputError;
  }

  if (as_json) out << report_json(report).dump(2) << "\n";
  else print_text(report, out);
  return report.checks.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace catstat::cli
