#include "permlei/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace permlei {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational rat_parse(const std::string& s) {
  // ^-?[0-9]+(/[1-9][0-9]*)?$
  std::size_t pos = 0;
  if (pos < s.size() && s[pos] == '-') ++pos;
  std::size_t slash = s.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(s, pos, s.size());
  } else {
    ok = all_digits(s, pos, slash) && slash + 1 < s.size() &&
         s[slash + 1] != '0' && all_digits(s, slash + 1, s.size());
  }
  if (!ok) throw std::invalid_argument("invalid rational literal: " + s);
  Rational q(s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace permlei
