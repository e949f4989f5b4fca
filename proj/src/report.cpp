#include "permlei/report.hpp"

#include <algorithm>
#include <sstream>

namespace permlei {

void VerificationReport::sort_canonical() {
  std::stable_sort(witnesses.begin(), witnesses.end(),
                   [](const Witness& a, const Witness& b) {
                     if (a.decl_index != b.decl_index)
                       return a.decl_index < b.decl_index;
                     return a.idx < b.idx;
                   });
}

void VerificationReport::merge(const VerificationReport& other) {
  witnesses.insert(witnesses.end(), other.witnesses.begin(),
                   other.witnesses.end());
}

std::string VerificationReport::summary(
    std::size_t max_witnesses, const std::vector<std::string>& names) const {
  std::ostringstream os;
  if (passed()) {
    os << "pass\n";
    return os.str();
  }
  os << "fail: " << witnesses.size() << " witness"
     << (witnesses.size() == 1 ? "" : "es") << "\n";
  std::size_t shown = 0;
  for (const auto& w : witnesses) {
    if (shown == max_witnesses) {
      os << "  ... " << (witnesses.size() - shown) << " more suppressed\n";
      break;
    }
    os << "  " << w.identity << " (";
    for (int a = 0; a < w.arity; ++a) os << (a ? "," : "") << w.idx[a];
    os << "): residual";
    bool first = true;
    for (std::size_t t = 0; t < w.residual.size(); ++t) {
      if (w.residual[t] == 0) continue;
      os << (first ? " " : " + ") << rat_str(w.residual[t]) << "*";
      if (t < names.size())
        os << names[t];
      else
        os << "e" << t;
      first = false;
    }
    os << "\n";
    ++shown;
  }
  return os.str();
}

}  // namespace permlei
