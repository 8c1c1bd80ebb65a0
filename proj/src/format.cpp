#include "totval/format.hpp"

#include <cctype>
#include <charconv>

namespace totval {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s, const char* kind = "total valency") : s_(s), kind_(kind) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ == s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  Int integer() {
    skip_ws();
    Int value = 0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    if (begin != end && *begin == '+') fail("unexpected '+'");
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("malformed " + std::string(kind_) + " '" + std::string(s_) + "': " + what +
                          " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view s_;
  const char* kind_;
  std::size_t pos_ = 0;
};

std::vector<Valency> parse_sum(Cursor& c, char terminator) {
  std::vector<Valency> out;
  if (c.peek(terminator) || (terminator == '\0' && c.done())) return out;
  while (true) {
    Int theta = c.integer();
    c.expect('/');
    Int lambda = c.integer();
    out.push_back(Valency::make(theta, lambda));
    if (!c.peek('+')) break;
    c.expect('+');
  }
  return out;
}

}  // namespace

std::string to_text(std::span<const Valency> valencies) {
  std::string out;
  for (std::size_t i = 0; i < valencies.size(); ++i) {
    if (i) out += " + ";
    out += valencies[i].to_string();
  }
  return out;
}

std::string to_text(const TotalValency& t) {
  std::string out = "[" + std::to_string(t.genus()) + "," + std::to_string(t.order()) + ";";
  if (t.orbit_count() > 0) out += " " + to_text(t.valencies());
  return out + "]";
}

TotalValency parse_text(std::string_view text) {
  Cursor c(text);
  c.expect('[');
  Int genus = c.integer();
  c.expect(',');
  Int order = c.integer();
  c.expect(';');
  auto vs = parse_sum(c, ']');
  c.expect(']');
  if (!c.done()) c.fail("trailing characters");
  return TotalValency::make(genus, order, std::move(vs));
}

std::vector<Valency> parse_valency_sum(std::string_view text) {
  Cursor c(text, "valency sum");
  auto vs = parse_sum(c, '\0');
  if (!c.done()) c.fail("trailing characters");
  return vs;
}

Json to_json(const TotalValency& t) {
  Json vals = Json::array();
  auto vs = t.valencies();
  for (std::size_t i = 0; i < vs.size();) {
    std::size_t j = i;
    while (j < vs.size() && vs[j] == vs[i]) ++j;
    vals.push_back(Json{{"theta", vs[i].theta()},
                        {"lambda", vs[i].lambda()},
                        {"count", static_cast<Int>(j - i)}});
    i = j;
  }
  return Json{{"genus", t.genus()},
              {"order", t.order()},
              {"valencies", std::move(vals)},
              {"quotient_genus", quotient_signature(t).quotient_genus}};
}

TotalValency from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ValidationError("total valency JSON must be an object");
    std::vector<Valency> vs;
    for (const auto& e : j.at("valencies")) {
      Int count = e.contains("count") ? e.at("count").get<Int>() : 1;
      if (count < 1) throw ValidationError("valency count must be positive");
      auto v = Valency::make(e.at("theta").get<Int>(), e.at("lambda").get<Int>());
      for (Int c = 0; c < count; ++c) vs.push_back(v);
    }
    auto t = TotalValency::make(j.at("genus").get<Int>(), j.at("order").get<Int>(), std::move(vs));
    if (j.contains("quotient_genus") &&
        j.at("quotient_genus").get<Int>() != quotient_signature(t).quotient_genus) {
      throw ValidationError("quotient_genus field disagrees with Riemann-Hurwitz");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed total valency JSON: ") + e.what());
  }
}

TotalValency parse_total_valency(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("malformed total valency JSON: ") + e.what());
    }
    return from_json(j);
  }
  return parse_text(text);
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  Cursor c(text, "integer list");
  if (c.done()) return out;
  while (true) {
    out.push_back(c.integer());
    if (!c.peek(',')) break;
    c.expect(',');
  }
  if (!c.done()) c.fail("trailing characters");
  return out;
}

}  // namespace totval
