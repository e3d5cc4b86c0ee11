#include "model.hpp"

#include <cctype>
#include <cmath>

namespace gmorse {

double PotentialParams::b() const { return std::expm1(alpha * r_e); }

void PotentialParams::validate() const {
  if (!(D > 0))
    throw domain_error("PotentialParams: D must be positive");
  if (!(alpha >= 0))
    throw domain_error("PotentialParams: alpha must be non-negative");
  if (!(r_e > 0))
    throw domain_error("PotentialParams: r_e must be positive");
}

void RelativisticContext::validate() const {
  if (!(M > 0))
    throw domain_error("RelativisticContext: M must be positive");
  if (!(hbar * c > 0))
    throw domain_error("RelativisticContext: hbar*c must be positive");
}

void NonRelContext::validate() const {
  if (!(mu > 0))
    throw domain_error("NonRelContext: mu must be positive");
  if (!(hbar > 0))
    throw domain_error("NonRelContext: hbar must be positive");
}

void QuantumNumbers::validate() const {
  if (kappa == 0)
    throw domain_error("QuantumNumbers: kappa must be nonzero");
  if (n < 0)
    throw domain_error("QuantumNumbers: n must be non-negative");
}

namespace {

constexpr std::string_view kOrbitalLetters = "spdfgh";

int letter_to_l(char ch) {
  auto pos = kOrbitalLetters.find(static_cast<char>(std::tolower(ch)));
  if (pos == std::string_view::npos)
    throw label_error(std::string("unknown orbital letter '") + ch + "'");
  return static_cast<int>(pos);
}

} // namespace

SpectroscopicLabel SpectroscopicLabel::parse(std::string_view text) {
  SpectroscopicLabel out;
  std::size_t i = 0;
  auto fail = [&](const char *why) {
    throw label_error("bad state label '" + std::string(text) + "': " + why);
  };

  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    fail("expected leading integer");
  int principal = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    principal = principal * 10 + (text[i++] - '0');
  out.principal = principal;

  if (i >= text.size())
    fail("expected orbital letter");
  out.l = letter_to_l(text[i++]);

  if (i == text.size())
    return out; // plain "Nl"

  // optional j suffix: "_{3/2}", "{3/2}" or "3/2"
  if (text[i] == '_')
    ++i;
  bool braced = i < text.size() && text[i] == '{';
  if (braced)
    ++i;
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    fail("expected j as odd/2 fraction");
  int num = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    num = num * 10 + (text[i++] - '0');
  if (i >= text.size() || text[i] != '/')
    fail("expected '/' in j fraction");
  ++i;
  if (i >= text.size() || text[i] != '2')
    fail("j must be a half-integer written as odd/2");
  ++i;
  if (braced) {
    if (i >= text.size() || text[i] != '}')
      fail("unterminated '{'");
    ++i;
  }
  if (i != text.size())
    fail("trailing characters");
  if (num % 2 == 0)
    fail("2j must be odd");
  out.two_j = num;
  return out;
}

std::string SpectroscopicLabel::str() const {
  std::string s = std::to_string(principal);
  s += kOrbitalLetters.at(static_cast<std::size_t>(l));
  if (two_j >= 0) {
    s += "_{";
    s += std::to_string(two_j);
    s += "/2}";
  }
  return s;
}

QuantumNumbers kappa_from_label(const SpectroscopicLabel &label, Symmetry symmetry) {
  if (symmetry == Symmetry::nonrelativistic)
    throw label_error("kappa_from_label requires a relativistic mode");
  if (label.two_j < 0)
    throw label_error("label '" + label.str() + "' lacks the j suffix required in relativistic modes");
  const int two_l = 2 * label.l;
  if (std::abs(label.two_j - two_l) != 1)
    throw label_error("label '" + label.str() + "' has inconsistent (l, j)");

  QuantumNumbers q;
  q.n = label.principal; // relativistic tables print the radial n directly
  q.kappa = (label.two_j == two_l + 1) ? -(label.l + 1) : label.l;
  q.symmetry = symmetry;
  q.validate();
  return q;
}

QuantumNumbers kappa_from_label(std::string_view text, Symmetry symmetry) {
  return kappa_from_label(SpectroscopicLabel::parse(text), symmetry);
}

std::string label_from_state(const QuantumNumbers &q) {
  SpectroscopicLabel label;
  label.principal = q.n;
  label.l = q.kappa > 0 ? q.kappa : -q.kappa - 1;
  label.two_j = q.two_j();
  return label.str();
}

std::pair<int, int> nonrel_label_to_nl(const SpectroscopicLabel &label) {
  const int n = label.principal - label.l - 1;
  if (n < 0)
    throw label_error("label '" + label.str() + "' needs N >= l + 1");
  return {n, label.l};
}

std::pair<int, int> nonrel_label_to_nl(std::string_view text) {
  return nonrel_label_to_nl(SpectroscopicLabel::parse(text));
}

} // namespace gmorse
