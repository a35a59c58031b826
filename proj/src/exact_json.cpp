#include "pollctl/exact_json.hpp"

#include <cstdint>
#include <limits>
#include <vector>

#include "pollctl/error.hpp"

namespace pollctl {

namespace {

// Builds an ordered_json DOM but stores float tokens verbatim as strings.
// nlohmann also routes integers that overflow 64 bits through number_float,
// so arbitrarily large exact integers survive as well.
struct RawNumberSax : nlohmann::json_sax<ojson> {
  ojson root;
  std::vector<ojson*> stack;
  std::string pending_key;

  ojson* put(ojson&& v) {
    if (stack.empty()) {
      root = std::move(v);
      return &root;
    }
    ojson& top = *stack.back();
    if (top.is_array()) {
      top.push_back(std::move(v));
      return &top.back();
    }
    return &(top[pending_key] = std::move(v));
  }

  bool null() override { put(ojson(nullptr)); return true; }
  bool boolean(bool v) override { put(ojson(v)); return true; }
  bool number_integer(number_integer_t v) override { put(ojson(v)); return true; }
  bool number_unsigned(number_unsigned_t v) override { put(ojson(v)); return true; }
  bool number_float(number_float_t, const string_t& raw) override { put(ojson(raw)); return true; }
  bool string(string_t& v) override { put(ojson(v)); return true; }
  bool binary(binary_t& v) override { put(ojson(std::move(v))); return true; }
  bool start_object(std::size_t) override { stack.push_back(put(ojson::object())); return true; }
  bool key(string_t& k) override { pending_key = k; return true; }
  bool end_object() override { stack.pop_back(); return true; }
  bool start_array(std::size_t) override { stack.push_back(put(ojson::array())); return true; }
  bool end_array() override { stack.pop_back(); return true; }
  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    throw Error(Errc::MALFORMED_DOCUMENT,
                "json parse error at byte " + std::to_string(position) + ": " + ex.what());
  }
};

}  // namespace

ojson parse_exact_json(const std::string& text) {
  RawNumberSax sax;
  ojson::sax_parse(text, &sax);
  return std::move(sax.root);
}

Rational rational_from_json(const ojson& value, const std::string& context) {
  if (value.is_number_integer()) return Rational(BigInt(value.get<std::int64_t>()));
  if (value.is_number_unsigned()) return Rational(BigInt(value.get<std::uint64_t>()));
  if (value.is_string()) return rational_from_string(value.get<std::string>());
  throw Error(Errc::MALFORMED_DOCUMENT, context + ": expected a numeric scalar");
}

ojson rational_to_json(const Rational& q) {
  if (denominator(q) == 1) {
    BigInt num = numerator(q);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
      return ojson(num.convert_to<std::int64_t>());
  }
  return ojson(rational_to_string(q));
}

}  // namespace pollctl
