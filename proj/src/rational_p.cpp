#include "illusion/rational_p.hpp"

#include <charconv>
#include <numeric>

#include "illusion/errors.hpp"

namespace illusion {

RationalP::RationalP(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den) {
    throw InvalidParameters("p must satisfy 0 <= a <= b, b > 0; got " + std::to_string(num) +
                            "/" + std::to_string(den));
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parse_component(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last || s.front() == '-' || s.front() == '+') {
    throw InvalidParameters("malformed rational '" + std::string(whole) + "', expected A/B");
  }
  return value;
}

}  // namespace

RationalP RationalP::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw InvalidParameters("malformed rational '" + std::string(text) + "', expected A/B");
  }
  return RationalP(parse_component(text.substr(0, slash), text),
                   parse_component(text.substr(slash + 1), text));
}

std::string RationalP::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

}  // namespace illusion
