#include "sympsum/exponent.hpp"

#include <charconv>

#include "sympsum/numfmt.hpp"

namespace sympsum {

std::string Exponent::str() const {
  if (is_inf()) return "inf";
  return format_shortest(p_);
}

Exponent Exponent::parse(const std::string& text) {
  if (text == "inf") return Exponent::inf();
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("Exponent: cannot parse \"" + text + "\"");
  return Exponent(v);
}

}  // namespace sympsum
