#include "hurwitz/json_io.hpp"

#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Forwards to the DOM builder, but turns integer literals that overflowed to
// floating point back into their exact digit strings.
class LosslessSax {
 public:
  explicit LosslessSax(Json& root) : dom_(root, false) {}

  bool null() { return dom_.null(); }
  bool boolean(bool v) { return dom_.boolean(v); }
  bool number_integer(Json::number_integer_t v) { return dom_.number_integer(v); }
  bool number_unsigned(Json::number_unsigned_t v) { return dom_.number_unsigned(v); }
  bool number_float(Json::number_float_t v, const Json::string_t& raw) {
    if (raw.find_first_of(".eE") == Json::string_t::npos) {
      Json::string_t copy = raw;
      return dom_.string(copy);
    }
    return dom_.number_float(v, raw);
  }
  bool string(Json::string_t& v) { return dom_.string(v); }
  bool binary(Json::binary_t& v) { return dom_.binary(v); }
  bool start_object(std::size_t n) { return dom_.start_object(n); }
  bool key(Json::string_t& k) { return dom_.key(k); }
  bool end_object() { return dom_.end_object(); }
  bool start_array(std::size_t n) { return dom_.start_array(n); }
  bool end_array() { return dom_.end_array(); }
  bool parse_error(std::size_t pos, const std::string& token, const nlohmann::detail::exception& ex) {
    throw InvalidArgument("malformed JSON at byte " + std::to_string(pos) + " near '" + token + "': " + ex.what());
  }

 private:
  nlohmann::detail::json_sax_dom_parser<Json> dom_;
};

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Json element_json(const Element& u) {
  Json a = Json::array();
  for (const auto& q : u) a.push_back(rational_json(q));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(element_json(Element(m.row(i))));
  return rows;
}

std::string integer_array_json(std::span<const Integer> values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << values[i].get_str();
  }
  os << ']';
  return os.str();
}

std::string solution_json(const DiophantineFamily& family, const SolutionTuple& sol) {
  std::vector<Integer> c(family.c().begin(), family.c().end());
  std::ostringstream os;
  os << "{\"family\": \"" << family_id(family.id()) << "\", \"c\": " << integer_array_json(c);
  if (family.id() == Family::PowerNorm) os << ", \"n\": " << family.n();
  os << ", \"seed\": " << integer_array_json(sol.seed) << ", \"values\": " << integer_array_json(sol.values)
     << ", \"primitive\": " << (sol.primitive ? "true" : "false") << '}';
  return os.str();
}

Json parse_json_lossless(std::string_view text) {
  Json root;
  LosslessSax sax(root);
  Json::sax_parse(text.begin(), text.end(), &sax);
  return root;
}

Integer json_integer(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

std::vector<Integer> json_integer_array(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of integers, got " + j.dump());
  std::vector<Integer> out;
  for (const auto& v : j) out.push_back(json_integer(v));
  return out;
}

}  // namespace hurwitz
