#include "conelab/exact.hpp"

#include <cctype>
#include <limits>

namespace conelab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::CenterOnSecant: return "CenterOnSecant";
    case ErrorKind::BadScreen: return "BadScreen";
    case ErrorKind::SingularTransform: return "SingularTransform";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NoFormAvailable: return "NoFormAvailable";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num))
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  const Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps results identical across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

Rational sample_rational(Rng& rng, std::uint64_t height) {
  if (height < 1) throw Error(ErrorKind::InvalidArgument, "sample height must be >= 1");
  const auto h = static_cast<std::int64_t>(height);
  return Rational(rng.between(-h, h));
}

}  // namespace conelab
