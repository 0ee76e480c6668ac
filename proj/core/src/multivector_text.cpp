#include <cctype>
#include <map>

#include "cliff/clifford.hpp"
#include "cliff/error.hpp"

namespace cliff {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

int parse_index(std::string_view digits, int n) {
  if (digits.empty()) throw Error(ErrorKind::SyntaxError, "empty blade index");
  int value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::SyntaxError, "bad blade index '" + std::string(digits) + "'");
    }
    value = value * 10 + (c - '0');
    if (value > 1000) break;
  }
  if (value < 1 || value > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "blade index " + std::string(digits) + " outside 1.." + std::to_string(n));
  }
  return value;
}

BladeIndex parse_blade(std::string_view text, int n) {
  text = trim(text);
  if (text == "1") return BladeIndex{};
  if (text.empty() || text.front() != 'e') {
    throw Error(ErrorKind::SyntaxError, "expected a blade, got '" + std::string(text) + "'");
  }
  std::vector<int> indices;
  std::string_view body = text.substr(1);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw Error(ErrorKind::SyntaxError, "unterminated blade '" + std::string(text) + "'");
    for (std::string_view part : split(body.substr(1, body.size() - 2), ',')) {
      indices.push_back(parse_index(part, n));
    }
  } else {
    if (body.empty()) throw Error(ErrorKind::SyntaxError, "blade 'e' needs indices");
    for (char c : body) indices.push_back(parse_index(std::string_view(&c, 1), n));
  }
  std::uint32_t mask = 0;
  int previous = 0;
  for (int i : indices) {
    if (i <= previous) {
      throw Error(ErrorKind::SyntaxError,
                  "blade indices must be strictly increasing in '" + std::string(text) + "'");
    }
    previous = i;
    mask |= 1U << (i - 1);
  }
  return BladeIndex(mask);
}

}  // namespace

Multivector parse_multivector(std::string_view text, FormPtr form) {
  const int n = form->dim();
  const FieldSpec spec = form->field();
  Multivector out(form);

  // Normalise the unicode minus sign to '-'.
  std::string source(text);
  for (std::size_t pos; (pos = source.find("\xE2\x88\x92")) != std::string::npos;) {
    source.replace(pos, 3, "-");
  }

  std::vector<std::pair<bool, std::string>> terms;
  std::string current;
  bool negative = false;
  bool has_content = false;
  for (char c : source) {
    if (c == '+' || c == '-') {
      if (!has_content) {
        if (c == '-') negative = !negative;
        continue;
      }
      terms.emplace_back(negative, std::string(trim(current)));
      current.clear();
      has_content = false;
      negative = c == '-';
      continue;
    }
    current += c;
    if (!std::isspace(static_cast<unsigned char>(c))) has_content = true;
  }
  if (!has_content) {
    throw Error(ErrorKind::SyntaxError, "malformed multivector '" + std::string(text) + "'");
  }
  terms.emplace_back(negative, std::string(trim(current)));

  for (const auto& [neg, term_text] : terms) {
    const std::string_view term = term_text;
    FieldElement coef = FieldElement::one(spec);
    BladeIndex blade;
    if (auto star = term.find('*'); star != std::string_view::npos) {
      coef = FieldElement::parse(term.substr(0, star), spec);
      blade = parse_blade(term.substr(star + 1), n);
    } else if (!term.empty() && term.front() == 'e') {
      blade = parse_blade(term, n);
    } else {
      coef = FieldElement::parse(term, spec);
    }
    out.add(blade, neg ? -coef : coef);
  }
  return out;
}

std::string format_blade(BladeIndex blade, int n) {
  if (blade.is_scalar()) return "1";
  std::string out = "e";
  if (n <= 9) {
    for (int i = 1; i <= n; ++i) {
      if (blade.contains(i)) out += static_cast<char>('0' + i);
    }
    return out;
  }
  out += '{';
  bool first = true;
  for (int i = 1; i <= n; ++i) {
    if (!blade.contains(i)) continue;
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

std::string format_multivector(const Multivector& x) {
  const int n = x.form().dim();
  const FieldSpec spec = x.field();
  std::string out;
  for (BladeIndex b : x.support()) {
    FieldElement c = x[b];
    bool negative = spec.is_rational() && c.sign() < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (b.is_scalar()) {
      out += c.to_plain_string();
    } else if (c.is_one()) {
      out += format_blade(b, n);
    } else {
      out += c.to_plain_string() + "*" + format_blade(b, n);
    }
  }
  return out.empty() ? "0" : out;
}

QuadraticForm QuadraticForm::parse(std::string_view text, FieldSpec field) {
  text = trim(text);
  if (text.starts_with("diag:")) {
    std::vector<FieldElement> diag;
    for (std::string_view entry : split(text.substr(5), ',')) {
      diag.push_back(FieldElement::parse(entry, field));
    }
    return QuadraticForm(field, std::move(diag));
  }
  if (text.starts_with("sig:")) {
    const auto parts = split(text.substr(4), ',');
    if (parts.size() != 2) throw Error(ErrorKind::SyntaxError, "signature form is 'sig:r,s'");
    auto count = [&](std::string_view s) {
      const FieldElement v = FieldElement::parse(s, FieldSpec::rational());
      if (v.rational().get_den() != 1 || v.sign() < 0 || v.rational() > kMaxDimension) {
        throw Error(ErrorKind::SyntaxError, "bad signature count '" + std::string(s) + "'");
      }
      return static_cast<int>(v.rational().get_num().get_si());
    };
    return signature(count(parts[0]), count(parts[1]), field);
  }
  throw Error(ErrorKind::SyntaxError,
              "unknown form '" + std::string(text) + "' (expected diag:q1,...,qn or sig:r,s)");
}

Involution parse_involution(std::string_view name) {
  static const std::map<std::string_view, Involution> kNames = {
      {"alpha", Involution::Alpha}, {"tau", Involution::Tau}, {"c", Involution::Conjugation},
      {"conj", Involution::Conjugation}, {"conjugation", Involution::Conjugation},
      {"reverse", Involution::Tau}, {"grade", Involution::Alpha}};
  if (auto it = kNames.find(trim(name)); it != kNames.end()) return it->second;
  throw Error(ErrorKind::SyntaxError, "unknown involution '" + std::string(name) + "' (alpha, tau, c)");
}

std::string_view involution_name(Involution kind) noexcept {
  switch (kind) {
    case Involution::Alpha: return "alpha";
    case Involution::Tau: return "tau";
    case Involution::Conjugation: return "c";
  }
  return "?";
}

}  // namespace cliff
