#include "hurwitz/fibration.hpp"

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

FibrationInfo make(std::string name, std::string fiber, std::string base, Compactness c, std::string l = "",
                   std::string l0 = "", std::string l1 = "") {
  return {std::move(name), std::move(fiber), std::move(base), c, std::move(l), std::move(l0), std::move(l1)};
}

std::string sup(int k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char ch : std::to_string(k)) s += digits[ch - '0'];
  return s;
}

std::string hyperboloid(int m) {
  return "H" + sup(2 * m - 1) + "(" + std::to_string(m) + "," + std::to_string(m) + ")";
}

}  // namespace

std::string to_string(Compactness c) {
  switch (c) {
    case Compactness::Compact: return "compact";
    case Compactness::NoncompactCompactFiber: return "noncompact-compact-fiber";
    case Compactness::NoncompactNoncompactFiber: return "noncompact-noncompact-fiber";
  }
  return "";
}

const std::vector<FibrationRow>& fibration_table() {
  using C = Compactness;
  static const std::vector<FibrationRow> rows{
      {2, make("S¹ → {1}", "S¹", "{1}", C::Compact, "sp(4,ℝ)", "so(2)", "so(2,1)")},
      {2, make("ℝ → {1}", "ℝ", "{1}", C::NoncompactNoncompactFiber, "sp(4,ℝ)", "so(1,1)", "so(2,1)")},
      {4, make("S³ → S²", "S¹", "S²", C::Compact, "sp(8,ℝ)", "so(2)", "so(4,2)")},
      {4, make("ℝ² × S¹ → ℝ²", "S¹", "ℝ²", C::NoncompactCompactFiber, "sp(8,ℝ)", "so(2)", "so(4,2)")},
      {4, make("ℝ² × S¹ → ℝ × S¹", "ℝ", "ℝ × S¹", C::NoncompactNoncompactFiber, "sp(8,ℝ)", "so(1,1)", "so(3,3)")},
      {8, make("S⁷ → S⁴", "S³", "S⁴", C::Compact, "sp(16,ℝ)", "so(3)", "so(6,2)")},
      {8, make("ℝ⁴ × S³ → ℝ⁴", "S³", "ℝ⁴", C::NoncompactCompactFiber, "sp(16,ℝ)", "so(3)", "so(6,2)")},
      {8, make("ℝ⁴ × S³ → ℝ² × S²", "ℝ² × S¹", "ℝ² × S²", C::NoncompactNoncompactFiber, "sp(16,ℝ)", "so(2,1)",
               "so(4,4)")},
  };
  return rows;
}

FibrationInfo fibration_table_lookup(int dim, Compactness compactness) {
  for (const auto& row : fibration_table()) {
    if (row.dim == dim && row.info.compactness == compactness) return row.info;
  }
  throw UnclassifiedSpec("no fibration row for dimension " + std::to_string(dim) + ", " + to_string(compactness));
}

Compactness compactness_class(const TransformSpec& spec) {
  const Metric m = metric(spec.sig);
  if (m.compact()) return Compactness::Compact;
  for (int k : vanishing_components(spec)) {
    if (m.eta[static_cast<std::size_t>(k)] != 1) return Compactness::NoncompactNoncompactFiber;
  }
  return Compactness::NoncompactCompactFiber;
}

FibrationInfo fibration(const TransformSpec& spec) {
  if (spec.n != 1) throw UnclassifiedSpec("only quadratic maps (N = 1) are classified, got " + to_string(spec));
  const int dim = spec.sig.dim();
  const int m = dim / 2;
  const bool compact = metric(spec.sig).compact();
  const TransformType type = classify(spec.sig, spec.eps);

  switch (type.kind) {
    case TransformKind::A:
      if (compact) {
        return make("S" + sup(dim - 1) + " → ℝP" + sup(dim - 1), "Z₂", "ℝP" + sup(dim - 1), Compactness::Compact);
      }
      return make(hyperboloid(m) + " → " + hyperboloid(m) + "/Z₂", "Z₂", hyperboloid(m) + "/Z₂",
                  Compactness::NoncompactCompactFiber);
    case TransformKind::B:
      if (*type.j_index == 0 && dim > 2) {
        if (compact) return make("S" + sup(dim - 1) + " → {1}", "S" + sup(dim - 1), "{1}", Compactness::Compact);
        return make(hyperboloid(m) + " → {1}", "ℝ" + sup(m) + " × S" + sup(m - 1), "{1}",
                    Compactness::NoncompactNoncompactFiber);
      }
      return fibration_table_lookup(dim, compactness_class(spec));
    case TransformKind::C:
      if (dim == 8 && vanishing_components(spec).size() == 1) {
        const Compactness cls = compactness_class(spec);
        switch (cls) {
          case Compactness::Compact: return make("S⁷ → ℂP³", "S¹", "ℂP³", cls);
          case Compactness::NoncompactCompactFiber: return make("ℝ⁴ × S³ → ℝ⁴ × S²", "S¹", "ℝ⁴ × S²", cls);
          case Compactness::NoncompactNoncompactFiber: return make("ℝ⁴ × S³ → ℝ³ × S³", "ℝ", "ℝ³ × S³", cls);
        }
      }
      break;
  }
  throw UnclassifiedSpec("no fibration is classified for " + to_string(spec));
}

}  // namespace hurwitz
