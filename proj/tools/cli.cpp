#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/calculus.hpp"
#include "hurwitz/dynamics.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/fibration.hpp"
#include "hurwitz/hurwitz_matrix.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/number_theory.hpp"
#include "hurwitz/sampling.hpp"
#include "hurwitz/selftest.hpp"
#include "hurwitz/transform.hpp"

using namespace hurwitz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIdentity = 3;

enum class Format { Plain, Json, Csv };

// What a command produced, in every format it supports.
struct Output {
  std::string plain;
  hurwitz::Json json;
  std::vector<std::vector<std::string>> csv;
  std::optional<std::string> raw_json;  // used instead of json when set
  int exit_code = kExitOk;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void emit(const Output& out, Format format) {
  switch (format) {
    case Format::Plain: std::cout << out.plain; break;
    case Format::Json:
      if (out.raw_json) {
        std::cout << *out.raw_json;
      } else {
        std::cout << out.json.dump(2) << '\n';
      }
      break;
    case Format::Csv:
      for (const auto& row : out.csv) {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
        std::cout << '\n';
      }
      break;
  }
}

// Flags shared by the commands that take an algebra and a sign vector.
struct SpecFlags {
  int dim = 0;
  std::string c;
  std::string eps;
  std::string name;
  int n = 1;
  bool lk_positive = false;

  void add_algebra(CLI::App* app) {
    app->add_option("--dim", dim, "algebra dimension: 2, 4 or 8");
    app->add_option("--c", c, "sign parameters, e.g. -1,-1");
  }
  void add_transform(CLI::App* app, bool with_n) {
    add_algebra(app);
    app->add_option("--eps", eps, "sign vector with leading 1, e.g. 1,-1,1,1");
    app->add_option("--spec", name,
                    "named transform: LEVI_CIVITA, KUSTAANHEIMO_STIEFEL, IWAI, LAMBERT_KIBLER, FOCK");
    app->add_flag("--lk-positive", lk_positive, "LAMBERT_KIBLER with c1 = c2 = 1");
    if (with_n) app->add_option("--n", n, "power N");
  }

  Signature signature() const {
    if (dim == 0) throw InvalidArgument("--dim is required");
    return Signature(dim, parse_int_list(c));
  }

  TransformSpec spec(bool n_given) const {
    if (!name.empty()) {
      static const std::vector<std::pair<std::string, NamedTransform>> names{
          {"LEVI_CIVITA", NamedTransform::LeviCivita},
          {"KUSTAANHEIMO_STIEFEL", NamedTransform::KustaanheimoStiefel},
          {"KS", NamedTransform::KustaanheimoStiefel},
          {"IWAI", NamedTransform::Iwai},
          {"LAMBERT_KIBLER", NamedTransform::LambertKibler},
          {"FOCK", NamedTransform::Fock}};
      for (const auto& [key, value] : names) {
        if (key == name) {
          TransformSpec s = named(value, lk_positive);
          if (n_given) s.n = n;
          return s;
        }
      }
      throw InvalidArgument("unknown transform name '" + name + "'");
    }
    const Signature sig = signature();
    const SignVector e = eps.empty() ? SignVector::identity(sig.dim()) : SignVector(parse_int_list(eps));
    return TransformSpec(n, sig, e);
  }
};

Element parse_element(const std::string& text) { return Element(parse_rational_list(text)); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string indices(const std::vector<int>& v) {
  std::vector<std::string> s;
  for (int i : v) s.push_back("x" + std::to_string(i));
  return join(s, ", ");
}

hurwitz::Json spec_json(const TransformSpec& spec) {
  hurwitz::Json j;
  j["n"] = spec.n;
  j["dim"] = spec.sig.dim();
  j["c"] = spec.sig.c();
  j["eps"] = spec.eps.entries();
  return j;
}

// algebra multiply
Output algebra_multiply(const SpecFlags& f, const std::string& u_text, const std::string& v_text) {
  const Signature sig = f.signature();
  const Element u = parse_element(u_text), v = parse_element(v_text);
  const Element w = multiply(u, v, sig);
  const auto [nw, nu, nv] = composition_identity(u, v, sig);
  Output out;
  out.plain = "w = " + to_string(w) + "\nw^T eta w = " + to_string(nw) + " = (" + to_string(nu) + ")(" +
              to_string(nv) + ")\n";
  out.json = {{"algebra", sig.label()}, {"w", element_json(w)}, {"norm_w", to_string(nw)},
              {"norm_u", to_string(nu)}, {"norm_v", to_string(nv)}};
  out.csv = {{"component", "value"}};
  for (int i = 0; i < w.dim(); ++i) out.csv.push_back({std::to_string(i), to_string(w[i])});
  return out;
}

// matrix show
Output matrix_show(const SpecFlags& f, const std::string& u_text) {
  const Signature sig = f.signature();
  Output out;
  const auto d = static_cast<std::size_t>(sig.dim());
  if (u_text.empty()) {
    hurwitz::Json rows = hurwitz::Json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::string> row;
      for (std::size_t j = 0; j < d; ++j) row.push_back(symbolic_entry(static_cast<int>(i), static_cast<int>(j)));
      rows.push_back(row);
      out.csv.push_back(row);
      os << join(row, "\t") << '\n';
    }
    out.plain = "H(u; " + sig.label() + ")\n" + os.str();
    out.json = {{"algebra", sig.label()}, {"symbolic", rows}};
    return out;
  }
  const Element u = parse_element(u_text);
  const Matrix h = hurwitz_matrix(u, sig);
  const Rational r = verify_property1(u, sig);
  std::ostringstream os;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < d; ++j) row.push_back(to_string(h(i, j)));
    out.csv.push_back(row);
    os << join(row, "\t") << '\n';
  }
  out.plain = "H(" + to_string(u) + "; " + sig.label() + ")\n" + os.str() + "H^T eta H = " + to_string(r) + " eta\n";
  out.json = {{"algebra", sig.label()}, {"matrix", matrix_json(h)}, {"r", to_string(r)}};
  return out;
}

// transform apply
Output transform_apply(const TransformSpec& spec, const std::string& u_text) {
  const Element u = parse_element(u_text);
  const Element x = apply(spec, u);
  const auto [lhs, rhs] = verify_norm_power(spec, u);
  const auto van = vanishing_components(spec);
  Output out;
  out.plain = "x = " + to_string(x) + "\n";
  if (!van.empty()) {
    out.plain += "vanishing: " + indices(van) + " (R^" + std::to_string(spec.sig.dim()) + " -> R^" +
                 std::to_string(spec.sig.dim() - static_cast<int>(van.size())) + ")\n";
  }
  out.plain += "x^T eta x = " + to_string(lhs) + " = (u^T eta u)^" + std::to_string(spec.n + 1) + "\n";
  out.json = {{"spec", spec_json(spec)}, {"u", element_json(u)}, {"x", element_json(x)},
              {"vanishing", van},        {"norm_x", to_string(lhs)}, {"norm_u_power", to_string(rhs)}};
  out.csv = {{"component", "value", "vanishing"}};
  for (int i = 0; i < x.dim(); ++i) {
    const bool v = std::find(van.begin(), van.end(), i) != van.end();
    out.csv.push_back({std::to_string(i), to_string(x[i]), v ? "true" : "false"});
  }
  return out;
}

// transform classify
Output transform_classify(const TransformSpec& spec) {
  const TransformType type = classify(spec.sig, spec.eps);
  const auto van = vanishing_components(spec);
  const std::string kind = type.label(spec.n).substr(0, 1);
  Output out;
  out.plain = to_string(spec) + ": type " + type.label(spec.n) + ", " + std::to_string(van.size()) +
              " vanishing component(s)\n";
  out.json = {{"spec", spec_json(spec)}, {"kind", kind}, {"label", type.label(spec.n)}, {"n_vanishing", van.size()}};
  out.json["j_index"] = type.j_index ? hurwitz::Json(*type.j_index) : hurwitz::Json(nullptr);
  out.csv = {{"kind", "j_index", "label", "n_vanishing"},
             {kind, type.j_index ? std::to_string(*type.j_index) : "", type.label(spec.n), std::to_string(van.size())}};
  return out;
}

// transform forms
Output transform_forms(const TransformSpec& spec) {
  const auto forms = quadratic_forms(spec);
  Output out;
  std::ostringstream os;
  hurwitz::Json list = hurwitz::Json::array();
  out.csv = {{"component", "form"}};
  for (std::size_t a = 0; a < forms.forms.size(); ++a) {
    const std::string text = form_to_string(forms.forms[a]);
    os << "x" << a << " = " << text << '\n';
    list.push_back({{"component", a}, {"polynomial", text}, {"matrix", matrix_json(forms.forms[a])}});
    out.csv.push_back({std::to_string(a), text});
  }
  out.plain = os.str() + "vanishing: " + (forms.vanishing.empty() ? "none" : indices(forms.vanishing)) + "\n";
  out.json = {{"spec", spec_json(spec)}, {"forms", list}, {"vanishing", forms.vanishing}, {"n", forms.n()}};
  return out;
}

// transform fibration
Output transform_fibration(const TransformSpec& spec) {
  const FibrationInfo f = fibration(spec);
  auto or_na = [](const std::string& s) { return s.empty() ? std::string("n/a") : s; };
  Output out;
  out.plain = "fibration: " + f.name + "\nfiber: " + f.fiber + "\nbase: " + f.base +
              "\ncompactness: " + to_string(f.compactness) + "\nL = " + or_na(f.L) + ", L0 = " + or_na(f.L0) +
              ", L1 = " + or_na(f.L1) + "\n";
  out.json = {{"name", f.name}, {"fiber", f.fiber}, {"base", f.base}, {"compactness", to_string(f.compactness)},
              {"L", f.L},       {"L0", f.L0},       {"L1", f.L1}};
  out.csv = {{"name", "fiber", "base", "compactness", "L", "L0", "L1"},
             {f.name, f.fiber, f.base, to_string(f.compactness), f.L, f.L0, f.L1}};
  return out;
}

hurwitz::Json check_json(const IdentityCheck& c) {
  return {{"relation", c.relation}, {"method", c.method}, {"lhs", c.lhs},
          {"rhs", c.rhs},           {"relative_error", c.relative_error}, {"passed", c.passed}};
}

// calculus verify
Output calculus_verify(const TransformSpec& spec, int trials, std::uint64_t seed, const std::string& f_text) {
  Sampler s(seed);
  Output out;
  hurwitz::Json checks = hurwitz::Json::array();
  out.csv = {{"relation", "method", "trial", "passed", "lhs", "rhs"}};
  bool all = true;
  std::ostringstream os;
  auto record = [&](const IdentityCheck& c, int trial) {
    checks.push_back(check_json(c));
    out.csv.push_back({c.relation, c.method, std::to_string(trial), c.passed ? "true" : "false", c.lhs, c.rhs});
    all = all && c.passed;
  };

  if (spec.n == 1) {
    verify_total_differentials(spec);
    record({"total differentials", "exact", "rows are d(x_a)", "rows are d(x_a)", 0.0, true}, 0);
    for (int t = 0; t < trials; ++t) {
      const Element u = s.element(spec.sig.dim());
      const Element du = s.element(spec.sig.dim());
      const auto [lhs, rhs] = verify_one_form_norm(spec, u, du);
      record({"one-form norm", "exact", to_string(lhs), to_string(rhs), 0.0, lhs == rhs}, t);
      if (!constraint_rows(spec).empty()) {
        Element dk = Element::zero(spec.sig.dim());
        for (const auto& b : constraint_kernel(spec, u)) dk += s.rational() * b;
        const Rational full = line_element_reduction(spec, u, dk);
        record({"constrained line element", "exact", to_string(full), to_string(full), 0.0, true}, t);
      }
    }
  }
  const bool power_case = spec.sig.dim() == 2 && spec.eps.is_identity() && spec.n != -1;
  if (power_case) {
    const std::vector<std::string> names{"x0", "x1"};
    const int c1 = spec.sig.c(1);
    const Polynomial f = f_text.empty() ? Polynomial(standard_test_functions(c1).back())
                                        : parse_polynomial(f_text, names, {{"c1", Rational(c1)}});
    for (int t = 0; t < trials; ++t) {
      const auto report = verify_power_map(c1, spec.n, s.off_cone(spec.sig), f);
      for (const auto& c : report.checks) record(c, t);
    }
  }
  if (spec.n != 1 && !power_case) {
    throw InvalidArgument("calculus verify needs N = 1, or a dimension-2 identity-eps spec with N != -1");
  }
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c["passed"].get<bool>() ? 1 : 0;
  os << to_string(spec) << ": " << passed << "/" << checks.size() << " identity checks passed over " << trials
     << " trial(s)\n";
  out.plain = os.str();
  out.json = {{"spec", spec_json(spec)}, {"trials", trials}, {"seed", seed}, {"passed", all}, {"checks", checks}};
  if (!all) out.exit_code = kExitIdentity;
  return out;
}

DiophantineFamily make_family(const std::string& id, const std::string& c_text, int n) {
  const Family f = parse_family(id);
  return DiophantineFamily(f, c_text.empty() ? std::vector<int>{} : parse_int_list(c_text), n);
}

std::string integer_list(const std::vector<Integer>& v) {
  std::vector<std::string> s;
  for (const auto& z : v) s.push_back(z.get_str());
  return join(s, ", ");
}

// dio generate
Output dio_generate(const DiophantineFamily& family, int bound, bool primitive, bool dedupe) {
  const auto sols = generate(family, bound, {primitive, dedupe});
  Output out;
  std::ostringstream plain, json;
  json << "[";
  const std::string letters = "ABCDEFGHI";
  std::vector<std::string> header{"seed"};
  for (int i = 0; i < family.arity(); ++i) header.push_back(std::string(1, letters[i]));
  header.push_back("primitive");
  out.csv.push_back(header);
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    json << (i ? ",\n " : "\n ") << solution_json(family, s);
    plain << "(" << integer_list(s.values) << ")  seed (" << integer_list(s.seed) << ")"
          << (s.primitive ? "" : "  non-primitive") << '\n';
    std::vector<std::string> row{integer_list(s.seed)};
    for (const auto& v : s.values) row.push_back(v.get_str());
    row.push_back(s.primitive ? "true" : "false");
    out.csv.push_back(row);
  }
  json << (sols.empty() ? "]\n" : "\n]\n");
  out.raw_json = json.str();
  plain << sols.size() << " solution(s) of " << family_id(family.id()) << " from seeds in [-" << bound << ", "
        << bound << "]\n";
  out.plain = plain.str();
  return out;
}

// dio verify
Output dio_verify(const std::vector<std::pair<DiophantineFamily, std::vector<Integer>>>& items) {
  Output out;
  std::ostringstream plain, json;
  json << "[";
  out.csv = {{"family", "values", "valid"}};
  bool all = true;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& [family, values] = items[i];
    const bool ok = verify(family, values);
    all = all && ok;
    json << (i ? ",\n " : "\n ") << "{\"family\": \"" << family_id(family.id()) << "\", \"values\": "
         << integer_array_json(values) << ", \"valid\": " << (ok ? "true" : "false") << "}";
    plain << family_id(family.id()) << " (" << integer_list(values) << "): " << (ok ? "true" : "false") << '\n';
    out.csv.push_back({family_id(family.id()), integer_list(values), ok ? "true" : "false"});
  }
  json << (items.empty() ? "]\n" : "\n]\n");
  out.raw_json = json.str();
  out.plain = plain.str();
  if (!all) out.exit_code = kExitDomain;
  return out;
}

std::vector<std::pair<DiophantineFamily, std::vector<Integer>>> read_dio_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const hurwitz::Json doc = parse_json_lossless(text);
  const hurwitz::Json list = doc.is_array() ? doc : hurwitz::Json::array({doc});
  std::vector<std::pair<DiophantineFamily, std::vector<Integer>>> items;
  for (const auto& item : list) {
    if (!item.is_object() || !item.contains("family") || !item.contains("values")) {
      throw InvalidArgument("each entry needs \"family\" and \"values\"");
    }
    std::vector<int> c;
    if (item.contains("c")) {
      for (const auto& z : json_integer_array(item["c"])) c.push_back(static_cast<int>(z.get_si()));
    }
    const int n = item.contains("n") ? item["n"].get<int>() : 2;
    items.emplace_back(DiophantineFamily(parse_family(item["family"].get<std::string>()), c, n),
                       json_integer_array(item["values"]));
  }
  return items;
}

// dynamics pairs
Output dynamics_pairs(const std::string& range) {
  const auto colon = range.find(':', range.empty() ? 0 : 1);
  if (colon == std::string::npos) throw InvalidArgument("--range expects min:max, got '" + range + "'");
  const int lo = static_cast<int>(parse_integer(range.substr(0, colon)).get_si());
  const int hi = static_cast<int>(parse_integer(range.substr(colon + 1)).get_si());
  Output out;
  out.json = hurwitz::Json::array();
  out.csv = {{"alpha", "N", "trivial"}};
  std::ostringstream os;
  for (const auto& p : admissible_pairs(lo, hi)) {
    hurwitz::Json row = hurwitz::Json::array({p.alpha, p.n});
    if (p.trivial) row.push_back("trivial");
    out.json.push_back(row);
    out.csv.push_back({std::to_string(p.alpha), std::to_string(p.n), p.trivial ? "true" : "false"});
    os << "(" << p.alpha << ", " << p.n << ")" << (p.trivial ? " trivial" : "") << '\n';
  }
  out.plain = os.str();
  return out;
}

// dynamics dualize
Output dynamics_dualize(const std::string& alpha, int n, const std::string& z, const std::string& e) {
  const DualityResult d = dualize(parse_rational(alpha), n, parse_rational(z), parse_rational(e));
  Output out;
  out.plain = "potential: " + to_string(d.new_potential_coefficient) + " rho^" +
              std::to_string(d.new_potential_exponent) + "\neigenvalue: " + to_string(d.new_eigenvalue) +
              "\nroles swapped: " + (d.roles_swapped ? "yes" : "no") + "\n";
  out.json = {{"alpha", to_string(d.alpha)},
              {"n", d.n},
              {"new_potential_exponent", d.new_potential_exponent},
              {"new_potential_coefficient", to_string(d.new_potential_coefficient)},
              {"new_eigenvalue", to_string(d.new_eigenvalue)},
              {"roles_swapped", d.roles_swapped}};
  out.csv = {{"alpha", "n", "new_potential_exponent", "new_potential_coefficient", "new_eigenvalue", "roles_swapped"},
             {to_string(d.alpha), std::to_string(d.n), std::to_string(d.new_potential_exponent),
              to_string(d.new_potential_coefficient), to_string(d.new_eigenvalue), d.roles_swapped ? "true" : "false"}};
  return out;
}

// selftest
Output selftest(std::uint64_t seed, int only, Format format) {
  Output out;
  out.json = hurwitz::Json::array();
  out.csv = {{"criterion", "title", "passed", "seconds", "detail"}};
  bool all = true;
  auto handle = [&](const CriterionResult& r) {
    all = all && r.passed;
    if (format == Format::Plain) std::cout << format_result(r) << std::endl;
    out.json.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    out.csv.push_back({std::to_string(r.id), r.title, r.passed ? "true" : "false", std::to_string(r.seconds), r.detail});
  };
  if (only) {
    handle(run_criterion(only, seed));
  } else {
    run_selftest(seed, handle);
  }
  if (!all) out.exit_code = kExitIdentity;
  return out;
}

Format default_format() {
  const char* env = std::getenv("HURWITZ_FORMAT");
  if (!env) return Format::Plain;
  const std::string v(env);
  if (v == "json") return Format::Json;
  if (v == "csv") return Format::Csv;
  return Format::Plain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Cayley-Dickson algebra, Hurwitz transformation and Diophantine toolkit"};
  app.require_subcommand(1);
  Format format = default_format();
  const std::map<std::string, Format> format_names{
      {"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", format, "output format: plain, json or csv (default from HURWITZ_FORMAT)")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
      ->envname("HURWITZ_FORMAT");
  app.fallthrough();

  std::function<Output()> action;
  SpecFlags flags;
  std::string u_text, v_text, f_text, family_id_text, values_text, input, range, alpha, z, e;
  int bound = 2, trials = 10, criterion = 0, dio_n = 2, dyn_n = 1;
  bool primitive = false, dedupe = false;
  std::uint64_t seed = kDefaultSelftestSeed;

  auto* algebra = app.add_subcommand("algebra", "hypercomplex arithmetic")->require_subcommand(1);
  auto* mult = algebra->add_subcommand("multiply", "w = u v and the composition identity");
  flags.add_algebra(mult);
  mult->add_option("--u", u_text, "left factor, comma-separated rationals")->required();
  mult->add_option("--v", v_text, "right factor")->required();
  mult->callback([&] { action = [&] { return algebra_multiply(flags, u_text, v_text); }; });

  auto* matrix = app.add_subcommand("matrix", "Hurwitz matrices")->require_subcommand(1);
  auto* show = matrix->add_subcommand("show", "symbolic H(u; c), or its value at --u");
  flags.add_algebra(show);
  show->add_option("--u", u_text, "evaluate at this element instead of printing symbols");
  show->callback([&] { action = [&] { return matrix_show(flags, u_text); }; });

  auto* transform = app.add_subcommand("transform", "Hurwitz transformations T[N; c; eps]")->require_subcommand(1);
  auto* apply_cmd = transform->add_subcommand("apply", "x = H(u)^N (eps u)");
  flags.add_transform(apply_cmd, true);
  apply_cmd->add_option("--u", u_text, "input element, comma-separated rationals")->required();
  apply_cmd->callback([&] {
    action = [&] { return transform_apply(flags.spec(apply_cmd->count("--n") > 0), u_text); };
  });
  auto* classify_cmd = transform->add_subcommand("classify", "type A, B or C");
  flags.add_transform(classify_cmd, true);
  classify_cmd->callback([&] {
    action = [&] { return transform_classify(flags.spec(classify_cmd->count("--n") > 0)); };
  });
  auto* forms_cmd = transform->add_subcommand("forms", "quadratic forms of an N = 1 map");
  flags.add_transform(forms_cmd, false);
  forms_cmd->callback([&] { action = [&] { return transform_forms(flags.spec(false)); }; });
  auto* fib_cmd = transform->add_subcommand("fibration", "fibration and Lie algebras of an N = 1 map");
  flags.add_transform(fib_cmd, false);
  fib_cmd->callback([&] { action = [&] { return transform_fibration(flags.spec(false)); }; });

  auto* calculus = app.add_subcommand("calculus", "differential identities")->require_subcommand(1);
  auto* cverify = calculus->add_subcommand("verify", "check one-form and power-map identities at random points");
  flags.add_transform(cverify, true);
  cverify->add_option("--trials", trials, "random points to check")->check(CLI::NonNegativeNumber);
  cverify->add_option("--seed", seed, "sampler seed");
  cverify->add_option("--f", f_text, "test function in x0, x1 for dimension-2 power maps");
  cverify->callback([&] {
    action = [&] { return calculus_verify(flags.spec(cverify->count("--n") > 0), trials, seed, f_text); };
  });

  auto* dio = app.add_subcommand("dio", "Diophantine families")->require_subcommand(1);
  auto* dgen = dio->add_subcommand("generate", "solutions from seeds in [-bound, bound]");
  dgen->add_option("--family", family_id_text, "EQ38, EQ38_DIM4, EQ38_DIM2, EQ43, EQ39, EQ39_DIM4, EQ40, EQ41, EQ46 or EQ47")->required();
  dgen->add_option("--c", flags.c, "sign parameters, e.g. -1,-1,-1");
  dgen->add_option("--n", dio_n, "power N for EQ47");
  dgen->add_option("--bound", bound, "seed entries range over [-bound, bound]")->check(CLI::NonNegativeNumber);
  dgen->add_flag("--primitive", primitive, "divide by the gcd (EQ47: keep gcd 1 only)");
  dgen->add_flag("--dedupe", dedupe, "one tuple per canonical key");
  dgen->callback([&] {
    action = [&] { return dio_generate(make_family(family_id_text, flags.c, dio_n), bound, primitive, dedupe); };
  });
  auto* dver = dio->add_subcommand("verify", "check tuples given by flags or as JSON (from a file or -)");
  dver->add_option("--family", family_id_text, "family identifier");
  dver->add_option("--c", flags.c, "sign parameters");
  dver->add_option("--n", dio_n, "power N for EQ47");
  dver->add_option("--values", values_text, "candidate tuple, comma-separated integers");
  dver->add_option("--input", input, "JSON file as written by dio generate, or - for stdin");
  dver->callback([&] {
    action = [&] {
      std::vector<std::pair<DiophantineFamily, std::vector<Integer>>> items;
      if (!input.empty()) {
        items = read_dio_input(input);
      } else {
        if (family_id_text.empty() || values_text.empty()) {
          throw InvalidArgument("dio verify needs --input, or --family and --values");
        }
        std::vector<Integer> values;
        std::string item;
        std::istringstream ss(values_text);
        while (std::getline(ss, item, ',')) values.push_back(parse_integer(item));
        items.emplace_back(make_family(family_id_text, flags.c, dio_n), values);
      }
      return dio_verify(items);
    };
  });

  auto* dynamics = app.add_subcommand("dynamics", "potential duality")->require_subcommand(1);
  auto* pairs = dynamics->add_subcommand("pairs", "admissible (alpha, N)");
  pairs->add_option("--range", range, "alpha range as min:max")->required();
  pairs->callback([&] { action = [&] { return dynamics_pairs(range); }; });
  auto* dual = dynamics->add_subcommand("dualize", "transformed potential and eigenvalue");
  dual->add_option("--alpha", alpha, "potential exponent")->required();
  dual->add_option("--n", dyn_n, "power N")->required();
  dual->add_option("--z", z, "coupling constant Z")->required();
  dual->add_option("--e", e, "energy E")->required();
  dual->callback([&] { action = [&] { return dynamics_dualize(alpha, dyn_n, z, e); }; });

  auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
  self->add_option("--seed", seed, "sampler seed");
  self->add_option("--criterion", criterion, "run a single criterion")->check(CLI::Range(1, kCriterionCount));
  self->callback([&] { action = [&] { return selftest(seed, criterion, format); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Output out = action();
    emit(out, format);
    return out.exit_code;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ToleranceExceeded& e) {
    std::cerr << "tolerance exceeded: " << e.what() << '\n';
    return kExitIdentity;
  } catch (const IdentityViolation& e) {
    std::cerr << "identity violation: " << e.what() << '\n';
    return kExitIdentity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
