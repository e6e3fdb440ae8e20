#include "weylreps/text_format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <optional>
#include <system_error>

#include "weylreps/error.hpp"

namespace weylreps {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  char next() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_blank() {
    while (!done()) {
      const char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') next();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        next();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column_, what); }

  void expect(char c) {
    skip_blank();
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    next();
  }

  std::string found() const {
    if (done()) return " but reached end of input";
    return std::string(", found '") + peek() + "'";
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool is_key_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

RecordField parse_field(Cursor& cur) {
  cur.skip_blank();
  RecordField field;
  if (!is_key_char(cur.peek())) cur.fail("expected a key" + cur.found());
  while (is_key_char(cur.peek())) field.key += cur.next();
  cur.expect(':');
  cur.skip_blank();
  field.line = cur.line();
  field.column = cur.column();
  if (cur.peek() == '"') {
    field.quoted = true;
    cur.next();
    while (!cur.done() && cur.peek() != '"') {
      if (cur.peek() == '\n') cur.fail("unterminated string");
      field.value += cur.next();
    }
    if (cur.done()) cur.fail("unterminated string");
    cur.next();
  } else {
    while (!cur.done()) {
      const char c = cur.peek();
      if (c == ',' || c == '}' || c == '#' || std::isspace(static_cast<unsigned char>(c))) break;
      field.value += cur.next();
    }
    if (field.value.empty()) cur.fail("expected a value for '" + field.key + "'" + cur.found());
  }
  return field;
}

Record parse_record(Cursor& cur) {
  cur.skip_blank();
  Record rec{{}, cur.line(), cur.column()};
  cur.expect('{');
  cur.skip_blank();
  if (cur.peek() == '}') {
    cur.next();
    return rec;
  }
  while (true) {
    rec.fields.push_back(parse_field(cur));
    cur.skip_blank();
    if (cur.peek() == ',') {
      cur.next();
      continue;
    }
    if (cur.peek() == '}') {
      cur.next();
      return rec;
    }
    cur.fail("expected ',' or '}'" + cur.found());
  }
}

// Typed access to a record's fields with positioned errors.
class FieldReader {
 public:
  FieldReader(const Record& rec, std::initializer_list<std::string_view> allowed) : rec_(rec) {
    for (const auto& f : rec.fields) {
      bool ok = false;
      for (auto k : allowed) ok = ok || f.key == k;
      if (!ok) throw ParseError(f.line, f.column, "unknown key '" + f.key + "'");
      for (const auto& g : rec.fields) {
        if (&g != &f && g.key == f.key) throw ParseError(g.line, g.column, "duplicate key '" + f.key + "'");
      }
    }
  }

  const RecordField* find(std::string_view key) const {
    for (const auto& f : rec_.fields) {
      if (f.key == key) return &f;
    }
    return nullptr;
  }

  const RecordField& require(std::string_view key) const {
    const RecordField* f = find(key);
    if (f == nullptr) throw ParseError(rec_.line, rec_.column, "missing key '" + std::string(key) + "'");
    return *f;
  }

  Rational rational(std::string_view key) const {
    const RecordField& f = require(key);
    try {
      return Rational::parse(f.value);
    } catch (const InvalidArgument& e) {
      throw ParseError(f.line, f.column, e.what());
    }
  }

  std::optional<Rational> optional_rational(std::string_view key) const {
    if (find(key) == nullptr) return std::nullopt;
    return rational(key);
  }

  double number(std::string_view key, std::optional<double> fallback = std::nullopt) const {
    const RecordField* f = find(key);
    if (f == nullptr) {
      if (fallback) return *fallback;
      require(key);
    }
    double value = 0.0;
    const char* first = f->value.data();
    const char* last = first + f->value.size();
    if (!f->value.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
      throw ParseError(f->line, f->column, "malformed number '" + f->value + "'");
    }
    return value;
  }

  Complex complex() const { return {number("re"), number("im", 0.0)}; }

  std::string word(std::string_view key) const { return require(key).value; }

 private:
  const Record& rec_;
};

std::string complex_fields(Complex c) {
  return "re: " + format_double(c.real()) + ", im: " + format_double(c.imag());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

StateFunctional make_state(std::string_view kind, const std::optional<Rational>& parameter,
                           const std::function<void(const std::string&)>& fail) {
  if (kind == "vacuum") {
    if (parameter) fail("the vacuum state takes no parameter");
    return StateFunctional::vacuum();
  }
  if (kind != "position" && kind != "momentum") fail("unknown state kind '" + std::string(kind) + "'");
  if (!parameter) fail("state kind '" + std::string(kind) + "' needs a rational parameter");
  return kind == "position" ? StateFunctional::position(*parameter) : StateFunctional::momentum(*parameter);
}

}  // namespace

std::vector<Record> parse_records(std::string_view text) {
  Cursor cur(text);
  std::vector<Record> out;
  cur.skip_blank();
  const bool bracketed = cur.peek() == '[';
  if (bracketed) cur.next();
  while (true) {
    cur.skip_blank();
    if (cur.peek() == ',') {
      cur.next();
      continue;
    }
    if (bracketed && cur.peek() == ']') {
      cur.next();
      cur.skip_blank();
      if (!cur.done()) cur.fail("unexpected input after ']'");
      return out;
    }
    if (cur.done()) {
      if (bracketed) cur.fail("expected ']' but reached end of input");
      return out;
    }
    out.push_back(parse_record(cur));
  }
}

std::string format_double(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw InvalidArgument("format_double: conversion failed");
  return {buf, ptr};
}

WeylElement parse_element(std::string_view text) {
  WeylElement::Terms terms;
  for (const auto& rec : parse_records(text)) {
    const FieldReader r(rec, {"a", "b", "re", "im"});
    WeylIndex index{r.rational("a"), r.rational("b")};
    const Complex c = r.complex();
    auto [it, inserted] = terms.try_emplace(std::move(index), c);
    if (!inserted) it->second += c;
  }
  return WeylElement::from_terms(terms);
}

std::string serialize_element(const WeylElement& x) {
  std::string out;
  for (const auto& [index, c] : x.terms()) {
    out += "{a: \"" + index.a.str() + "\", b: \"" + index.b.str() + "\", " + complex_fields(c) + "}\n";
  }
  return out;
}

StateFunctional parse_state(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && (t.front() == '{' || t.front() == '[')) {
    const auto records = parse_records(t);
    if (records.size() != 1) throw ParseError(1, 1, "expected exactly one state record");
    const Record& rec = records.front();
    const FieldReader r(rec, {"kind", "lambda", "mu"});
    const std::string kind = r.word("kind");
    std::optional<Rational> parameter;
    if (kind == "position") parameter = r.optional_rational("lambda");
    if (kind == "momentum") parameter = r.optional_rational("mu");
    if (kind == "vacuum" && (r.find("lambda") != nullptr || r.find("mu") != nullptr)) {
      throw ParseError(rec.line, rec.column, "the vacuum state takes no parameter");
    }
    return make_state(kind, parameter, [&](const std::string& m) -> void { throw ParseError(rec.line, rec.column, m); });
  }

  const auto colon = t.find(':');
  const std::string_view kind = t.substr(0, colon);
  std::optional<Rational> parameter;
  if (colon != std::string_view::npos) parameter = Rational::parse(t.substr(colon + 1));
  return make_state(kind, parameter, [](const std::string& m) -> void { throw InvalidArgument(m); });
}

std::string serialize_state(const StateFunctional& state) {
  switch (state.kind()) {
    case StateKind::Position:
      return "{kind: \"position\", lambda: \"" + state.parameter().str() + "\"}\n";
    case StateKind::Momentum:
      return "{kind: \"momentum\", mu: \"" + state.parameter().str() + "\"}\n";
    case StateKind::Vacuum:
      return "{kind: \"vacuum\"}\n";
  }
  return {};
}

FiniteSupportVector parse_support_vector(std::string_view text) {
  std::optional<Flavor> flavor;
  FiniteSupportVector::Amplitudes amps;
  for (const auto& rec : parse_records(text)) {
    const FieldReader r(rec, {"point", "re", "im", "flavor"});
    Flavor f = Flavor::Position;
    if (const RecordField* field = r.find("flavor")) {
      if (field->value == "momentum") {
        f = Flavor::Momentum;
      } else if (field->value != "position") {
        throw ParseError(field->line, field->column, "unknown flavor '" + field->value + "'");
      }
    }
    if (flavor && *flavor != f) throw ParseError(rec.line, rec.column, "records disagree on flavor");
    flavor = f;
    const Complex c = r.complex();
    auto [it, inserted] = amps.try_emplace(r.rational("point"), c);
    if (!inserted) it->second += c;
  }
  return {flavor.value_or(Flavor::Position), std::move(amps)};
}

std::string serialize_support_vector(const FiniteSupportVector& v) {
  const char* flavor = v.flavor() == Flavor::Position ? "position" : "momentum";
  std::string out;
  for (const auto& [x, c] : v.amplitudes()) {
    out += "{point: \"" + x.str() + "\", " + complex_fields(c) + ", flavor: \"" + flavor + "\"}\n";
  }
  return out;
}

TrigPolynomial parse_polynomial(std::string_view text) {
  TrigPolynomial::Coefficients coefficients;
  for (const auto& rec : parse_records(text)) {
    const FieldReader r(rec, {"freq", "re", "im"});
    const Complex c = r.complex();
    auto [it, inserted] = coefficients.try_emplace(r.rational("freq"), c);
    if (!inserted) it->second += c;
  }
  return TrigPolynomial(coefficients);
}

std::string serialize_polynomial(const TrigPolynomial& f) {
  std::string out;
  for (const auto& [a, c] : f.coefficients()) out += "{freq: \"" + a.str() + "\", " + complex_fields(c) + "}\n";
  return out;
}

std::string serialize_reduced(const ReducedVector& r) {
  std::string out;
  for (const auto& [key, c] : r.amplitudes) out += "{shift: \"" + key.str() + "\", " + complex_fields(c) + "}\n";
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (item.empty()) throw InvalidArgument("empty entry in rational list '" + std::string(text) + "'");
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace weylreps
