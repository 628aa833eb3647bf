#include "conicline/textio.hpp"

#include <cctype>
#include <sstream>

namespace conicline {

namespace {

// Normalizes the unicode minus sign and strips whitespace.
std::string preprocess(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == 0xE2 && i + 2 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
      continue;
    }
    if (!std::isspace(c)) out += text[i];
  }
  return out;
}

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
};

std::string take_number(Cursor& c) {
  std::string num;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    num += c.s[c.pos++];
  }
  return num;
}

}  // namespace

UniPoly parse_poly(const FieldSpec& f, const std::string& text) {
  const std::string s = preprocess(text);
  if (s.empty()) throw ParseError("empty polynomial");
  Cursor cur{s};
  UniPoly acc(f);
  bool first = true;
  while (!cur.done()) {
    // Sign.
    bool negative = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
      negative = cur.peek() == '-';
      ++cur.pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " +
                       std::to_string(cur.pos) + " in \"" + text + "\"");
    }
    first = false;
    if (cur.done()) throw ParseError("dangling sign in \"" + text + "\"");

    // Coefficient.
    mpq_class coeff(1);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      const std::string num = take_number(cur);
      mpz_class den(1);
      if (!cur.done() && cur.peek() == '/') {
        ++cur.pos;
        const std::string d = take_number(cur);
        if (d.empty()) throw ParseError("missing denominator in \"" + text + "\"");
        den = mpz_class(d);
        if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
      }
      coeff = mpq_class(mpz_class(num), den);
      coeff.canonicalize();
      saw_coeff = true;
    }
    if (negative) coeff = -coeff;

    // Variable part.
    int exponent = 0;
    if (!cur.done() && (cur.peek() == '*' || cur.peek() == 't')) {
      if (cur.peek() == '*') {
        ++cur.pos;
        if (cur.done() || cur.peek() != 't') {
          throw ParseError("expected t after '*' in \"" + text + "\"");
        }
      }
      ++cur.pos;  // consume 't'
      exponent = 1;
      if (!cur.done() && cur.peek() == '^') {
        ++cur.pos;
        const std::string e = take_number(cur);
        if (e.empty()) throw ParseError("missing exponent in \"" + text + "\"");
        exponent = std::stoi(e);
      }
    } else if (!saw_coeff) {
      throw ParseError("expected term at position " + std::to_string(cur.pos) +
                       " in \"" + text + "\"");
    }

    acc = acc + UniPoly::monomial(Scalar::from_mpq(f, coeff), exponent);
  }
  return acc;
}

std::string format_poly(const UniPoly& p) {
  if (p.is_zero()) return "0";
  const FieldSpec& f = p.field();
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Scalar c = p.coeff(k);
    if (c.is_zero()) continue;

    std::string mag;
    bool negative = false;
    if (f.is_rationals()) {
      mpq_class q = c.rat();
      if (q < 0) {
        negative = true;
        q = -q;
      }
      std::ostringstream ms;
      ms << q;
      mag = ms.str();
    } else {
      mag = c.str();
    }

    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }

    const bool unit = mag == "1";
    if (k == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace conicline
